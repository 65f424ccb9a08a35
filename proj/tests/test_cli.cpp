// End-to-end checks of the ghct binary: exit codes, determinism, and the
// exact/approximate agreement of the cut and flow subcommands.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ghct/corpus.hpp"
#include "ghct/io.hpp"

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::cout << "ok: " << what << '\n';
    } else {
        std::cout << "FAIL: " << what << '\n';
        ++failures;
    }
}

int run(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(GHCT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (output) *output = out;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string report_field(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
    return "";
}

}  // namespace

int main() {
    const std::string dir = "/tmp/ghct_cli_test";
    std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const std::string g10 = dir + "/g10.ghct";
    ghct::write_file_atomic(g10, ghct::serialize_graph(
                                     ghct::random_connected_weighted(10, 20, 31, 1.0, 6.0)));
    const std::string big = dir + "/big.ghct";
    ghct::write_file_atomic(big, ghct::serialize_graph(ghct::cycle_graph(16)));
    const std::string bad = dir + "/bad.ghct";
    ghct::write_file_atomic(bad, "p ghct 3 1\ne 1 1 2\n");

    // exit codes per error class
    expect(run("") == 2, "missing subcommand exits 2");
    expect(run("sparsify") == 2, "missing input exits 2");
    expect(run("sparsify --epsilon 2 " + g10) == 2, "invalid epsilon exits 2");
    expect(run("strength " + dir + "/nope.ghct") == 3, "missing file exits 3");
    expect(run("strength " + bad) == 3, "malformed file exits 3");
    expect(run("strength --exact " + big) == 4, "oracle cap exits 4");
    expect(run("verify --corpus small") == 0, "verify small passes");

    std::string report;
    expect(run("verify --corpus full", &report) == 0, "verify full passes");
    expect(report_field(report, "result") == "pass", "verify report result field");

    // determinism: identical invocations produce byte-identical artifacts
    const std::string out1 = dir + "/s1.ghct";
    const std::string out2 = dir + "/s2.ghct";
    expect(run("sparsify --epsilon 0.5 --d 1 --seed 7 --out " + out1 + " " + g10) == 0,
           "sparsify run 1");
    expect(run("sparsify --epsilon 0.5 --d 1 --seed 7 --out " + out2 + " " + g10) == 0,
           "sparsify run 2");
    expect(!slurp(out1).empty() && slurp(out1) == slurp(out2),
           "sparsify output is byte-identical across runs");

    // epsilon 0 sentinel: mincut and maxflow agree by duality
    std::string cutrep;
    std::string flowrep;
    expect(run("mincut --source 1 --sink 10 --epsilon 0 " + g10, &cutrep) == 0, "mincut runs");
    expect(run("maxflow --source 1 --sink 10 --epsilon 0 " + g10, &flowrep) == 0,
           "maxflow runs");
    double cut = std::atof(report_field(cutrep, "cut_value").c_str());
    double flow = std::atof(report_field(flowrep, "flow_value").c_str());
    expect(cut > 0 && std::abs(cut - flow) <= 1e-9 * cut,
           "exact mincut equals exact maxflow");

    // strength labels file feeds back into sparsify
    const std::string labels = dir + "/g10.labels";
    expect(run("strength --out " + labels + " " + g10) == 0, "strength writes labels");
    expect(run("sparsify --labels " + labels + " --seed 3 --out " + dir + "/s3.ghct " + g10) ==
               0,
           "sparsify accepts a labels file");

    // smooth produces a parseable graph with unchanged total weight
    const std::string smoothed = dir + "/smooth.ghct";
    expect(run("smooth --smooth-c auto --out " + smoothed + " " + g10) == 0, "smooth runs");
    ghct::ParsedGraph sp = ghct::load_graph(smoothed);
    ghct::ParsedGraph orig = ghct::load_graph(g10);
    expect(std::abs(sp.graph.total_weight() - orig.graph.total_weight()) < 1e-6,
           "smoothing preserves total weight");

    // DIMACS input supplies the terminals
    const std::string dimacs = dir + "/net.max";
    ghct::write_file_atomic(dimacs,
                            "p max 4 5\nn 1 s\nn 4 t\na 1 2 2\na 2 4 2\na 1 3 1\na 3 4 1\n"
                            "a 2 3 1\n");
    std::string dreport;
    expect(run("maxflow --epsilon 0 " + dimacs, &dreport) == 0, "DIMACS maxflow runs");
    expect(report_field(dreport, "flow_value") == "3", "DIMACS maxflow value");

    std::system(("rm -rf " + dir).c_str());
    if (failures) {
        std::cout << failures << " check(s) failed\n";
        return 1;
    }
    std::cout << "all cli checks passed\n";
    return 0;
}
