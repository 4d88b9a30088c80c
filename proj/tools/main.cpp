#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "symarr/errors.hpp"

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw symarr::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    using namespace symarr::cli;

    CLI::App app{"Rational homology of arrangements in symmetric products of surfaces"};
    std::string command_text;
    std::string input_path;
    std::string output_path;
    std::string format_text = "json";
    JobSpec job;

    app.add_option("command", command_text, "poset | union | complement | endspace | distinguish | selftest")
        ->required()
        ->check(CLI::IsMember({"poset", "union", "complement", "endspace", "distinguish", "selftest"}));
    app.add_option("--input", input_path, "Arrangement or parameter document (JSON)");
    app.add_option("--format", format_text, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--genus", job.params.genus, "Genus g of M_{g,k}");
    app.add_option("--punctures", job.params.punctures, "Puncture count k of M_{g,k}");
    app.add_option("--power", job.params.power, "Symmetric power n");
    app.add_option("--genus2", job.params.genus2, "Genus of the second surface (distinguish)");
    app.add_option("--punctures2", job.params.punctures2, "Punctures of the second surface (distinguish)");
    app.add_option("--seed", job.seed, "Seed for randomized selftest checks");
    app.add_option("--output", output_path, "Write the document here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    job.command = *parse_command(command_text);
    job.format = format_text == "table" ? Format::table : Format::json;

    if (!input_path.empty()) {
        try {
            auto parsed = parse_input(read_file(input_path));
            if (auto* arrangement = std::get_if<symarr::Arrangement>(&parsed)) {
                if (arrangement->duplicates_removed() > 0)
                    std::cerr << "warning: dropped " << arrangement->duplicates_removed() << " repeated generator(s)\n";
                job.arrangement = std::move(*arrangement);
            } else {
                const auto& record = std::get<ParameterRecord>(parsed);
                // Command-line flags win over the document.
                if (!job.params.genus) job.params.genus = record.genus;
                if (!job.params.punctures) job.params.punctures = record.punctures;
                if (!job.params.power) job.params.power = record.power;
                if (!job.params.genus2) job.params.genus2 = record.genus2;
                if (!job.params.punctures2) job.params.punctures2 = record.punctures2;
            }
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << input_path << ": " << e.what() << "\n";
            return kExitValidation;
        }
    }

    if (output_path.empty())
        return run(job, std::cout, std::cerr);

    std::ostringstream buffer;
    const int code = run(job, buffer, std::cerr);
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot write '" << output_path << "'\n";
        return kExitValidation;
    }
    out << buffer.str();
    return code;
}
