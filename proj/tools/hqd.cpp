// Command-line surface: build certificates, verify them independently,
// export DOT renderings, and run the small-instance brute-force oracle.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hqd/drivers.hpp"
#include "hqd/io.hpp"
#include "hqd/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void print_report(const hqd::VerificationReport& report) {
    for (const auto& f : report.failures)
        std::cout << "FAIL " << f.check << ": " << f.detail << "\n";
}

int write_output(const hqd::PartitionedDecomposition& d, const std::string& out,
                 const std::string& format, bool labels_binary) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty()) {
        file.open(out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot write " << out << "\n";
            return kExitUsage;
        }
        os = &file;
    }
    if (format == "json")
        *os << hqd::serialize_certificate(d, labels_binary);
    else if (format == "dot")
        hqd::write_dot(*os, d);
    else
        hqd::write_text(*os, d);
    return kExitOk;
}

int cmd_build(int n, int i, const std::string& out, const std::string& format,
              bool labels_binary) {
    if (n < 2 || n % 2 != 0 || i < 2 || i > n) {
        std::cerr << "error: need even n >= 2 and 2 <= i <= n\n";
        return kExitUsage;
    }
    hqd::PartitionedDecomposition d;
    try {
        d = hqd::decompose(n, i);
    } catch (const std::exception& e) {
        std::cerr << "error: construction failed: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    hqd::VerificationReport report = hqd::check_certificate(d);
    if (!report.ok()) {
        std::cout << "self-verification failed for n=" << n << " i=" << i << "\n";
        print_report(report);
        return kExitCheckFailed;
    }
    return write_output(d, out, format, labels_binary);
}

int cmd_verify(const std::string& path, int expect_n, long long expect_length) {
    hqd::PartitionedDecomposition d;
    try {
        d = hqd::read_certificate_file(path);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    hqd::VerificationReport report = hqd::check_certificate(d);
    if (expect_n > 0 && d.host_n != expect_n)
        report.fail("expectation.n", "certificate has n=" + std::to_string(d.host_n));
    if (expect_length > 0 && static_cast<long long>(d.cycle_length) != expect_length)
        report.fail("expectation.cycle-length",
                    "certificate has cycle_length=" + std::to_string(d.cycle_length));
    if (!report.ok()) {
        print_report(report);
        return kExitCheckFailed;
    }
    std::cout << "OK n=" << d.host_n << " cycle_length=" << d.cycle_length << " cycles="
              << d.cycles.size() << " sets=" << d.num_sets() << "\n";
    return kExitOk;
}

int cmd_export_dot(const std::string& in, const std::string& out) {
    hqd::PartitionedDecomposition d;
    try {
        d = hqd::read_certificate_file(in);
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitUsage;
    }
    hqd::write_dot(file, d);
    return kExitOk;
}

int cmd_oracle(int n, int i, const std::string& out) {
    std::optional<hqd::PartitionedDecomposition> found;
    try {
        found = hqd::brute_force_decompose(n, i);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!found) {
        std::cout << "no decomposition of Q_" << n << " into cycles of length " << (1 << i)
                  << " exists\n";
        return kExitCheckFailed;
    }
    hqd::VerificationReport report = hqd::check_certificate(*found);
    if (!report.ok()) {
        print_report(report);
        return kExitCheckFailed;
    }
    std::cout << "found: " << found->cycles.size() << " cycles, " << found->num_sets()
              << " partition sets\n";
    if (!out.empty()) return write_output(*found, out, "json", false);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partitionable cycle decompositions of even-dimensional hypercubes"};
    app.require_subcommand(1);

    int n = 0, i = 0;
    std::string out, format = "json", labels = "int";
    auto* build = app.add_subcommand("build", "construct a certificate for (n, i)");
    build->add_option("--n", n, "hypercube dimension (even)")->required();
    build->add_option("--i", i, "cycle length exponent, 2 <= i <= n")->required();
    build->add_option("--out", out, "output path (default stdout)");
    build->add_option("--format", format, "json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    build->add_option("--labels", labels, "vertex rendering in json output")
        ->check(CLI::IsMember({"int", "binary"}));

    std::string verify_path;
    int expect_n = 0;
    long long expect_length = 0;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("path", verify_path, "certificate file")->required();
    verify->add_option("--expect-n", expect_n, "require this dimension");
    verify->add_option("--expect-length", expect_length, "require this cycle length");

    std::string dot_in, dot_out;
    auto* exp = app.add_subcommand("export-dot", "render a certificate as DOT");
    exp->add_option("input", dot_in, "certificate file")->required();
    exp->add_option("output", dot_out, "dot file")->required();

    int on = 0, oi = 0;
    std::string oracle_out;
    auto* oracle = app.add_subcommand("oracle", "exhaustive search for small (n, i)");
    oracle->add_option("--n", on, "hypercube dimension")->required();
    oracle->add_option("--i", oi, "cycle length exponent")->required();
    oracle->add_option("--out", oracle_out, "write the found certificate here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (build->parsed()) return cmd_build(n, i, out, format, labels == "binary");
    if (verify->parsed()) return cmd_verify(verify_path, expect_n, expect_length);
    if (exp->parsed()) return cmd_export_dot(dot_in, dot_out);
    if (oracle->parsed()) return cmd_oracle(on, oi, oracle_out);
    return kExitUsage;
}
