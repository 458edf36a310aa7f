// Golden-file test for the command-line tool: fixed invocations must produce
// byte-identical output and the documented exit codes, and every machine-format
// line must round-trip through the JSON parser losslessly.
//
// usage: cli_golden <path-to-qmx> <golden-dir>
// set QMX_UPDATE_GOLDEN=1 to regenerate the expected files.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Case {
    std::string name;   // golden file stem
    std::string args;   // appended to the binary path
    int expected_exit;  // process exit code
};

const std::vector<Case> kCases = {
    {"relations_n2_machine", "relations --n 2 --format machine", 0},
    {"relations_n2_text", "relations --n 2", 0},
    {"verify_n2_machine", "verify --n 2 --format machine", 0},
    {"verify_n3_q2_machine", "verify --n 3 --q 2 --format machine", 0},
    {"verify_n2_trace_machine", "verify --n 2 --trace --format machine", 0},
    {"nf_machine", "nf --n 2 --format machine \"Z[1,1]*Z[2,2]\"", 0},
    {"nf_trace_machine", "nf --n 2 --trace --format machine \"Z[1,1]*Z[2,2]\"", 0},
    {"nf_text", "nf --n 2 \"Z[1,1]*Z[2,2]\"", 0},
    {"nf_q2_text", "nf --n 2 --q 2 \"Z[1,1]*Z[2,2]\"", 0},
    {"pbw_n2_d2_machine", "pbw --n 2 --deg 2 --format machine", 0},
    {"hilbert_n2_machine", "hilbert --n 2 --maxdeg 5 --check --gk --format machine", 0},
    {"hilbert_n3_text", "hilbert --n 3 --maxdeg 3", 0},
    {"pattern_n3_machine", "pattern --n 3 --format machine", 0},
    {"eliminate_witness_machine",
     "eliminate --n 2 --gens \"Z[2,2]\" --subset \"Z[2,2]\" --degree 1 --format machine", 0},
    {"eliminate_none_machine",
     "eliminate --n 2 --gens \"Z[2,1]\" --subset \"Z[2,2]\" --degree 2 --format machine", 0},
    {"error_parse", "nf --n 2 \"Z[1,3]\"", 3},
    {"error_usage", "nonsense", 2},
    {"error_small_n", "verify --n 1", 2},
};

std::string run(const std::string& command, int& exit_code) {
    std::string output;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return output;
    }
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return output;
}

bool machine_lines_roundtrip(const std::string& output, std::string& detail) {
    std::istringstream in(output);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] != '{') continue;
        auto parsed = nlohmann::ordered_json::parse(line, nullptr, false);
        if (parsed.is_discarded()) {
            detail = "unparseable machine line: " + line;
            return false;
        }
        if (parsed.dump() != line) {
            detail = "lossy machine line: " + line;
            return false;
        }
        if (!parsed.contains("record")) {
            detail = "machine line without a record field: " + line;
            return false;
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: cli_golden <qmx-binary> <golden-dir>\n";
        return 2;
    }
    std::string binary = argv[1];
    std::string golden_dir = argv[2];
    bool update = std::getenv("QMX_UPDATE_GOLDEN") != nullptr;

    int failures = 0;
    for (const auto& c : kCases) {
        int exit_code = 0;
        std::string output = run(binary + " " + c.args, exit_code);
        std::string path = golden_dir + "/" + c.name + ".golden";

        bool ok = true;
        std::string detail;
        if (exit_code != c.expected_exit) {
            ok = false;
            detail = "exit " + std::to_string(exit_code) + ", expected " +
                     std::to_string(c.expected_exit);
        }
        if (ok && !machine_lines_roundtrip(output, detail)) ok = false;

        if (update) {
            std::ofstream out(path, std::ios::binary);
            out << output;
        } else if (ok) {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                ok = false;
                detail = "missing golden file " + path;
            } else {
                std::stringstream buf;
                buf << in.rdbuf();
                if (buf.str() != output) {
                    ok = false;
                    detail = "output differs from " + path;
                }
            }
        }

        std::cout << (ok ? "ok   " : "FAIL ") << c.name;
        if (!ok) std::cout << "  [" << detail << "]\n--- actual ---\n" << output << "---";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    if (update) std::cout << "(golden files regenerated)\n";
    return failures == 0 ? 0 : 1;
}
