// Golden-file checks for the CLI: byte-identical reports across runs, stable
// exit codes, and the input-echo round trip.  argv: <ramicalc> <data dir>.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& cmdline, const std::string& tmp) {
    std::string full = cmdline + " > " + tmp + " 2>/dev/null";
    int rc = std::system(full.c_str());
    int code = rc < 0 ? -1 : WEXITSTATUS(rc);
    return {code, slurp(tmp)};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_golden <ramicalc binary> <data dir>\n";
        return 2;
    }
    std::string cli = argv[1], data = argv[2];
    std::string tmp1 = "cli_out_1.json", tmp2 = "cli_out_2.json";

    struct Case {
        std::string name;
        std::string args;
        int expect;
    };
    std::vector<Case> cases = {
        {"lambda-factor", "lambda-factor " + data + "/lambda_factor.json", 0},
        {"lambda-compose", "lambda-compose " + data + "/lambda_compose.json", 0},
        {"herbrand", "herbrand " + data + "/herbrand_s3.json", 0},
        {"tower", "tower " + data + "/tower_v4.json", 0},
        {"polygon", "polygon " + data + "/polygon.json", 0},
        {"profile", "profile " + data + "/profile.json --at 1/4", 0},
        {"radial", "radial " + data + "/radial_simple.json", 0},
        {"radial-fail", "radial " + data + "/radial_fail.json", 1},
        {"sigma", "sigma " + data + "/annulus_sigma.json", 0},
        {"different-check", "different-check " + data + "/annulus_sigma.json", 0},
        {"harmonicity", "harmonicity " + data + "/harmonicity.json --convention plus", 0},
        {"harmonicity-minus", "harmonicity " + data + "/harmonicity.json --convention minus", 1},
    };

    for (const auto& c : cases) {
        auto r1 = run(cli + " " + c.args, tmp1);
        auto r2 = run(cli + " " + c.args, tmp2);
        check(r1.exit_code == c.expect,
              c.name + ": exit code " + std::to_string(r1.exit_code) + " (want " +
                  std::to_string(c.expect) + ")");
        check(!r1.stdout_text.empty(), c.name + ": report emitted");
        check(r1.stdout_text == r2.stdout_text, c.name + ": byte-identical across runs");

        // round trip: the embedded input echo reproduces the same job
        try {
            auto rep = nlohmann::json::parse(r1.stdout_text);
            std::ofstream echo("cli_echo.json");
            echo << rep.at("input").dump();
            echo.close();
            std::string args = c.args;
            auto pos = args.find(data);
            auto end = args.find(".json", pos) + 5;
            args = args.substr(0, pos) + "cli_echo.json" + args.substr(end);
            auto r3 = run(cli + " " + args, tmp2);
            auto rep3 = nlohmann::json::parse(r3.stdout_text);
            check(rep.at("result") == rep3.at("result"), c.name + ": input echo round trip");
        } catch (const std::exception& e) {
            check(false, c.name + ": round trip (" + e.what() + ")");
        }
    }

    // malformed inputs exit 2
    for (const char* bad : {"malformed.json", "malformed_schema.json"}) {
        auto r = run(cli + " polygon " + data + "/" + bad, tmp1);
        check(r.exit_code == 2, std::string(bad) + ": exit 2");
    }
    {
        auto r = run(cli + " harmonicity " + data + "/harmonicity.json --convention sideways",
                     tmp1);
        check(r.exit_code == 2, "bad convention flag: exit 2");
    }

    // the harmonicity csv is deterministic too
    {
        auto r1 = run(cli + " harmonicity " + data + "/harmonicity.json --csv csv_a.csv", tmp1);
        auto r2 = run(cli + " harmonicity " + data + "/harmonicity.json --csv csv_b.csv", tmp2);
        (void)r1;
        (void)r2;
        check(slurp("csv_a.csv") == slurp("csv_b.csv") && !slurp("csv_a.csv").empty(),
              "flow csv: byte-identical across runs");
    }

    std::cout << (failures == 0 ? "cli golden checks passed\n"
                                : std::to_string(failures) + " cli golden checks failed\n");
    return failures == 0 ? 0 : 1;
}
