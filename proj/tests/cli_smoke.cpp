// End-to-end smoke test driving the installed binary through a shell.
// argv[1] is the path to the pfq executable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& bin, const std::string& args) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

int failures = 0;

void expect(bool ok, const char* what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what);
    if (!ok) ++failures;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_smoke <path-to-pfq>\n");
        return 2;
    }
    std::string bin = argv[1];

    RunResult help = run(bin, "--help");
    expect(help.code == 0 && !help.out.empty(), "--help exits 0");

    RunResult ev = run(bin, "eval --a 1,1 --b 2 --z 0.5 --output json");
    expect(ev.code == 0, "eval exits 0");
    bool value_ok = false, method_ok = false;
    try {
        auto j = nlohmann::json::parse(ev.out);
        value_ok =
            std::abs(j["value"].get<double>() - 2.0 * std::log(2.0)) <= 1e-12;
        method_ok = j["method"] == "direct";
    } catch (...) {
    }
    expect(value_ok, "eval value is 2 log 2");
    expect(method_ok, "eval method is direct");

    RunResult missing = run(bin, "eval --a 1,1 --b 2");
    expect(missing.code == 2, "missing --z exits 2");

    RunResult badb = run(bin, "eval --a 1,2 --b 0 --z 0.5");
    expect(badb.code == 2, "nonpositive integer b exits 2");

    RunResult diverge = run(bin, "eval --a 0.52,0.83 --b 1.95 --z 1.5");
    expect(diverge.code == 1, "divergent argument exits 1");

    RunResult csv = run(bin,
                        "constant --a 0.5,0.5,0.5 --b 0.75,0.75 --output csv");
    expect(csv.code == 0 && csv.out.rfind("rep,B,abs_err,L\n", 0) == 0,
           "constant csv header");

    RunResult ver = run(bin, "verify --suite partial-sums");
    expect(ver.code == 0 && ver.out.find("PASS") != std::string::npos &&
               ver.out.find("FAIL") == std::string::npos,
           "verify partial-sums passes");

    if (failures) std::printf("cli_smoke: %d failure(s)\n", failures);
    else std::printf("cli_smoke: all checks passed\n");
    return failures ? 1 : 0;
}
