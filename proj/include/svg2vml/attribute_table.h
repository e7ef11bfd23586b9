// Copyright 2026 The svg2vml Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace svg2vml {

/// Insertion-ordered name/value table with unique names.
class AttributeTable {
public:
    using Entry = std::pair<std::string, std::string>;

    AttributeTable() = default;
    AttributeTable(std::initializer_list<Entry> entries) {
        for (const auto& e : entries) {
            set(e.first, e.second);
        }
    }

    const std::string* find(std::string_view name) const noexcept {
        for (const auto& e : entries_) {
            if (e.first == name) {
                return &e.second;
            }
        }
        return nullptr;
    }

    bool contains(std::string_view name) const noexcept { return find(name) != nullptr; }

    /// Replaces the value in place when present, appends otherwise.
    void set(std::string_view name, std::string value) {
        for (auto& e : entries_) {
            if (e.first == name) {
                e.second = std::move(value);
                return;
            }
        }
        entries_.emplace_back(std::string(name), std::move(value));
    }

    /// Appends only when absent. Returns true when inserted.
    bool insert(std::string_view name, std::string value) {
        if (contains(name)) {
            return false;
        }
        entries_.emplace_back(std::string(name), std::move(value));
        return true;
    }

    bool erase(std::string_view name) {
        for (auto it = entries_.begin(); it != entries_.end(); ++it) {
            if (it->first == name) {
                entries_.erase(it);
                return true;
            }
        }
        return false;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const AttributeTable&, const AttributeTable&) = default;

private:
    std::vector<Entry> entries_;
};

} // namespace svg2vml
