// hilbsg command-line front end.
//
//   hilbsg run <spec> [--nmax N] [--format json|csv|text]
//   hilbsg verdict <spec>
//   hilbsg gap <spec>
//
// Exit status: 0 success, 1 unreadable or malformed input, 2 computation error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "hilbsg/hilbsg.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw hilbsg::ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

hilbsg::JobSpec load(const std::string& path, std::size_t nmax_override) {
    hilbsg::JobSpec job = hilbsg::parse_spec(read_file(path));
    if (nmax_override != 0) {
        if (nmax_override < hilbsg::min_nmax(job.dim()))
            throw hilbsg::ParseError("--nmax must be at least " + std::to_string(hilbsg::min_nmax(job.dim())), 0, 0);
        job.nmax = nmax_override;
    }
    return job;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert coefficients, sectional genera and Cohen-Macaulay checks for local rings"};
    app.require_subcommand(1);

    std::string spec_path;
    std::size_t nmax = 0;
    hilbsg::OutputFormat format = hilbsg::OutputFormat::json;
    const std::map<std::string, hilbsg::OutputFormat> formats{
        {"json", hilbsg::OutputFormat::json}, {"csv", hilbsg::OutputFormat::csv}, {"text", hilbsg::OutputFormat::text}};

    auto* run_cmd = app.add_subcommand("run", "compute lengths, Hilbert coefficients, invariants and verdicts");
    run_cmd->add_option("spec", spec_path, "job file")->required();
    run_cmd->add_option("--nmax", nmax, "override the job's nmax");
    run_cmd->add_option("--format", format, "output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

    auto* verdict_cmd = app.add_subcommand("verdict", "print only the verdict records");
    verdict_cmd->add_option("spec", spec_path, "job file")->required();

    auto* gap_cmd = app.add_subcommand("gap", "list the closure gap of a 2-dimensional affine semigroup");
    gap_cmd->add_option("spec", spec_path, "semigroup job file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run_cmd) {
            auto job = load(spec_path, nmax);
            std::cout << hilbsg::serialize(hilbsg::run(job), format);
        } else if (*verdict_cmd) {
            auto job = load(spec_path, 0);
            std::cout << hilbsg::verdicts_text(hilbsg::run(job).verdicts);
        } else if (*gap_cmd) {
            auto job = load(spec_path, 0);
            if (job.is_polynomial()) throw hilbsg::ParseError("'gap' needs a semigroup job", 0, 0);
            auto gap = hilbsg::sg_closure_gap(hilbsg::AffineSemigroup::from_ring(job.ring));
            std::cout << "closure gap size " << gap.size() << "\n";
            for (const auto& p : gap) std::cout << "(" << p[0] << "," << p[1] << ")\n";
        }
    } catch (const hilbsg::ParseError& e) {
        std::cerr << "hilbsg: " << spec_path << ": " << e.what() << "\n";
        return 1;
    } catch (const hilbsg::Error& e) {
        std::cerr << "hilbsg: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
