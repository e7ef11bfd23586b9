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


#include <svg2vml/cli.h>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace svg2vml {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConversion = 1;
constexpr int kExitUsage = 2;

std::optional<std::string> readAll(std::istream& stream) {
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    if (stream.bad()) {
        return std::nullopt;
    }
    return buffer.str();
}

void printDiagnostic(std::ostream& err, const Diagnostic& d, bool quiet) {
    if (quiet && d.severity == Severity::Warning) {
        return;
    }
    err << d.format() << '\n';
}

int ioError(std::ostream& err, const std::string& message) {
    err << Diagnostic{Severity::Error, std::string(codes::IoError), message, {}}.format() << '\n';
    return kExitConversion;
}

int runConvert(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
    std::optional<std::string> text;
    ConvertOptions options;
    options.mode = config.mode;
    options.precision = config.precision;
    options.strict = config.strict;
    options.pretty = config.pretty;
    if (config.input == kStdStream) {
        text = readAll(in);
    }
    else {
        std::ifstream file(config.input, std::ios::binary);
        if (file) {
            text = readAll(file);
        }
        options.title = std::filesystem::path(config.input).stem().string();
    }
    if (!text) {
        return ioError(err, "cannot read '" + config.input + "'");
    }

    const ConvertResult result = convertSvg(*text, options);
    for (const auto& d : result.diagnostics) {
        printDiagnostic(err, d, config.quiet);
    }
    if (!result.output) {
        return kExitConversion;
    }

    const std::string output = config.output.empty() ? defaultOutputPath(config.input, config.mode) : config.output;
    if (output == kStdStream) {
        out << *result.output;
        out.flush();
    }
    else {
        std::ofstream file(output, std::ios::binary | std::ios::trunc);
        file << *result.output;
        file.close();
        if (!file) {
            return ioError(err, "cannot write '" + output + "'");
        }
    }
    return result.hasErrors() ? kExitConversion : kExitOk;
}

} // namespace

std::string defaultOutputPath(const std::string& input, OutputMode mode) {
    if (input == kStdStream) {
        return std::string(kStdStream);
    }
    std::filesystem::path path(input);
    path.replace_extension(mode == OutputMode::XhtmlPassthrough ? ".xhtml" : ".html");
    return path.string();
}

int runCli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Converts SVG documents to VML/HTML for legacy Internet Explorer.", "svg2vml"};
    app.require_subcommand(1);
    CliConfig config;
    CLI::App* convert = app.add_subcommand("convert", "Convert one SVG document");
    convert->add_option("input", config.input, "SVG file, or - for standard input")->required();
    convert->add_option("-o,--output", config.output, "Output file, or - for standard output");
    const std::map<std::string, OutputMode> modes{{"vml", OutputMode::VmlHtml},
                                                  {"xhtml", OutputMode::XhtmlPassthrough}};
    convert->add_option("--mode", config.mode, "vml (default) or xhtml")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
    convert->add_option("--precision", config.precision, "Decimals in emitted numbers (0-12)")
        ->check(CLI::Range(0, kMaxPrecision));
    convert->add_flag("--strict", config.strict, "Treat warnings as errors and stop at the first error");
    convert->add_flag("--pretty", config.pretty, "Indent the output");
    convert->add_flag("--quiet", config.quiet, "Suppress warnings");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return kExitUsage;
    }
    return runConvert(config, in, out, err);
}

} // namespace svg2vml
