#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <variant>

#include "records.hpp"

using namespace gqss::cli;
using Catch::Approx;

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(GQSS_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        output.append(buffer, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

const fs::path& work_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("gqss-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
    const fs::path path = work_dir() / name;
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
    out.close();
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

const std::string& honest_scenario() {
    static const std::string path = write_file("honest.json", R"({
        "qubits": 4,
        "initial": ["plus", "plus", "plus", "plus"],
        "marked": [4, 6, 8, 11],
        "scheme": "multi-marked",
        "message": {"half_a": "north gate", "half_b": "at dawn"},
        "adversary": "honest",
        "trials": 64,
        "seed": 5
    })");
    return path;
}

const std::string& survey_scenario() {
    static const std::string path = write_file("survey.json", R"({
        "qubits": 4,
        "initial": ["plus", "plus", "plus", "plus"],
        "marked": [1, 3, 5, 7],
        "message": {"half_a": "left", "half_b": "right"},
        "trials": 40,
        "seed": 11
    })");
    return path;
}

const std::string& guessing_scenario() {
    static const std::string path = write_file("guessing.json", R"({
        "qubits": 4,
        "initial": ["plus", "plus", "plus", "plus"],
        "marked": [1, 3, 5, 7],
        "message": {"half_a": "left", "half_b": "right"},
        "adversary": {"strategy": "guess-diffusion"},
        "trials": 50,
        "seed": 21
    })");
    return path;
}

double cell_double(const Table& table, std::size_t row, const std::string& column) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c] == column) return std::get<double>(table.rows[row][c]);
    }
    FAIL("no column named " << column);
    return 0.0;
}

std::int64_t cell_int(const Table& table, std::size_t row, const std::string& column) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c] == column) return std::get<std::int64_t>(table.rows[row][c]);
    }
    FAIL("no column named " << column);
    return 0;
}

std::string cell_string(const Table& table, std::size_t row, const std::string& column) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c] == column) return std::get<std::string>(table.rows[row][c]);
    }
    FAIL("no column named " << column);
    return {};
}

} // namespace

TEST_CASE("grover traces the closed-form amplitudes", "[cli]") {
    const RunResult run = run_cli("grover --qubits 3 --marked 110 --iterations 2");
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.output.rfind("# table: grover\n", 0) == 0);
    REQUIRE(run.output.find("0.9453125") != std::string::npos);

    const Table table = parse_table(run.output, Format::Csv);
    REQUIRE(table.columns == std::vector<std::string>{"iteration", "marked_amplitude", "success"});
    REQUIRE(table.rows.size() == 3);
    REQUIRE(cell_int(table, 0, "iteration") == 0);
    REQUIRE(cell_double(table, 0, "success") == Approx(0.125).margin(1e-15));
    REQUIRE(cell_double(table, 1, "success") == Approx(25.0 / 32.0).margin(1e-15));
    REQUIRE(cell_double(table, 2, "success") == Approx(121.0 / 128.0).margin(1e-15));

    SECTION("the trace flag adds a simulation cross-check that stays tiny") {
        const RunResult traced =
            run_cli("grover --qubits 3 --marked 6 --iterations 4 --trace");
        REQUIRE(traced.exit_code == 0);
        const Table t = parse_table(traced.output, Format::Csv);
        REQUIRE(t.columns.size() == 5);
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            REQUIRE(cell_double(t, r, "sim_deviation") <= 1e-12);
        }
    }
    SECTION("bit strings and decimal indices name the same state") {
        const RunResult bits = run_cli("grover --qubits 3 --marked 110 --iterations 1");
        const RunResult decimal = run_cli("grover --qubits 3 --marked 6 --iterations 1");
        REQUIRE(bits.output == decimal.output);
    }
}

TEST_CASE("sweep samples the one-round success cubic", "[cli]") {
    const RunResult run = run_cli("sweep --samples 8");
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.output.find("\n0.25,1.0\n") != std::string::npos);
    REQUIRE(run.output.find("\n0.125,0.78125\n") != std::string::npos);

    const Table table = parse_table(run.output, Format::Csv);
    REQUIRE(table.rows.size() == 8);
    REQUIRE(cell_double(table, 7, "marked_ratio") == 1.0);
    REQUIRE(cell_double(table, 7, "success") == 1.0);

    SECTION("the quarter ratio is inserted when the grid would skip it") {
        const Table t = parse_table(run_cli("sweep --samples 3").output, Format::Csv);
        REQUIRE(t.rows.size() == 4);
        REQUIRE(cell_double(t, 0, "marked_ratio") == 0.25);
        REQUIRE(cell_double(t, 0, "success") == 1.0);
    }
    SECTION("too few samples is a usage error") {
        REQUIRE(run_cli("sweep --samples 1").exit_code == 2);
    }
}

TEST_CASE("table2 prints the truncated percent grid", "[cli]") {
    const RunResult run = run_cli("table2");
    REQUIRE(run.exit_code == 0);
    const Table table = parse_table(run.output, Format::Csv);
    REQUIRE(table.rows.size() == 10);

    std::map<std::pair<std::int64_t, std::int64_t>, std::string> displays;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        displays[{cell_int(table, r, "qubits"), cell_int(table, r, "iteration")}] =
            cell_string(table, r, "display");
    }
    const std::map<std::pair<std::int64_t, std::int64_t>, std::string> expected = {
        {{2, 1}, "100%"},
        {{3, 1}, "78%"},  {{3, 2}, "94.5%"},
        {{4, 1}, "47%"},  {{4, 2}, "90%"},  {{4, 3}, "96.1%"},
        {{5, 1}, "25%"},  {{5, 2}, "60%"},  {{5, 3}, "89%"},  {{5, 4}, "99.9%"},
    };
    REQUIRE(displays == expected);

    SECTION("extended mode exposes the unprinted cells") {
        const Table t = parse_table(run_cli("table2 --extended").output, Format::Csv);
        REQUIRE(t.rows.size() == 16);
        bool found = false;
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (cell_int(t, r, "qubits") == 3 && cell_int(t, r, "iteration") == 3) {
                REQUIRE(cell_double(t, r, "success") == Approx(169.0 / 512.0).margin(1e-15));
                REQUIRE(cell_string(t, r, "display").empty());
                found = true;
            }
        }
        REQUIRE(found);
    }
}

TEST_CASE("table1 renders the guess survey", "[cli]") {
    const RunResult run = run_cli("table1");
    REQUIRE(run.exit_code == 0);
    const Table table = parse_table(run.output, Format::Csv);
    REQUIRE(table.rows.size() == 10);
    REQUIRE(cell_string(table, 0, "guess") == "|+>|+>|+>|+>");
    REQUIRE(cell_string(table, 7, "guess") == "|-i>|+i>|-i>|+i>");
    REQUIRE(cell_string(table, 1, "outcome") == "-P_w|S1>");
    REQUIRE(cell_string(table, 6, "outcome").find("(0.375+0.125i)|0001>") !=
            std::string::npos);
    REQUIRE(cell_string(table, 0, "outcome") ==
            "(0.5)|0001> + (0.5)|0011> + (0.5)|0101> + (0.5)|0111>");

    SECTION("the survey accepts another marked set") {
        const Table t =
            parse_table(run_cli("table1 --marked 4,6,8,11").output, Format::Csv);
        REQUIRE(cell_string(t, 0, "outcome") ==
                "(0.5)|0100> + (0.5)|0110> + (0.5)|1000> + (0.5)|1011>");
    }
    SECTION("a wrong-sized marked set is a usage error") {
        REQUIRE(run_cli("table1 --marked 1,2,3").exit_code == 2);
    }
}

TEST_CASE("protocol reports outcome counts and writes the transcript", "[cli]") {
    const std::string transcript = (work_dir() / "honest-transcript.tsv").string();
    const RunResult run =
        run_cli("protocol " + honest_scenario() + " --transcript " + transcript);
    REQUIRE(run.exit_code == 0);

    const Table table = parse_table(run.output, Format::Csv);
    REQUIRE(table.name == "protocol");
    std::map<std::string, std::int64_t> counts;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        counts[cell_string(table, r, "label")] = cell_int(table, r, "count");
    }
    REQUIRE(counts.at("half_a") + counts.at("half_b") == 64);
    REQUIRE(counts.at("cheat_signal") == 0);
    REQUIRE(counts.at("correlated") == 0);

    const std::string log = read_file(transcript);
    REQUIRE(log.rfind("0\tPrepared\t", 0) == 0);
    REQUIRE(log.find("\tClassified\t") != std::string::npos);

    SECTION("the same scenario replays byte for byte") {
        const RunResult again =
            run_cli("protocol " + honest_scenario() + " --transcript " + transcript);
        REQUIRE(again.output == run.output);
        REQUIRE(again.exit_code == 0);
    }
    SECTION("a different seed shifts the sampled counts") {
        const RunResult shifted = run_cli("protocol " + honest_scenario() +
                                          " --seed 77 --transcript " + transcript);
        REQUIRE(shifted.exit_code == 0);
        REQUIRE(shifted.output != run.output);
    }
}

TEST_CASE("protocol signals tampering through its exit code", "[cli]") {
    const std::string transcript = (work_dir() / "guessing-transcript.tsv").string();
    const RunResult run =
        run_cli("protocol " + guessing_scenario() + " --transcript " + transcript);
    REQUIRE(run.exit_code == 3);
    const Table table = parse_table(run.output, Format::Csv);
    std::int64_t flagged = 0;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        if (cell_string(table, r, "label") == "cheat_signal") {
            flagged = cell_int(table, r, "count");
        }
    }
    REQUIRE(flagged > 0);
}

TEST_CASE("usage and configuration problems exit with code 2", "[cli]") {
    REQUIRE(run_cli("").exit_code == 2);
    REQUIRE(run_cli("unknown-command").exit_code == 2);
    REQUIRE(run_cli("grover --qubits 3").exit_code == 2);          // --marked missing
    REQUIRE(run_cli("grover --qubits 3 --marked 9").exit_code == 2);
    REQUIRE(run_cli("--format yaml sweep").exit_code == 2);
    REQUIRE(run_cli("protocol /no/such/scenario.json").exit_code == 2);

    const std::string transcript = (work_dir() / "unused.tsv").string();
    REQUIRE(run_cli("protocol " + honest_scenario() + " --trials 0 --transcript " +
                    transcript)
                .exit_code == 2);

    const std::string broken = write_file("broken.json", "{\n  \"qubits\": }");
    const RunResult run = run_cli("protocol " + broken + " --transcript " + transcript);
    REQUIRE(run.exit_code == 2);
    REQUIRE(run.output.find("broken.json") != std::string::npos);

    SECTION("help is not an error") {
        REQUIRE(run_cli("--help").exit_code == 0);
        REQUIRE(run_cli("grover --help").exit_code == 0);
    }
}

TEST_CASE("the structured format emits the same cells as csv", "[cli]") {
    const RunResult csv = run_cli("sweep --samples 4");
    const RunResult structured = run_cli("--format structured-text sweep --samples 4");
    REQUIRE(csv.exit_code == 0);
    REQUIRE(structured.exit_code == 0);
    REQUIRE(structured.output.front() == '{');
    REQUIRE(parse_table(structured.output, Format::StructuredText) ==
            parse_table(csv.output, Format::Csv));
}

TEST_CASE("output lands in the file named by --out", "[cli]") {
    const std::string out_path = (work_dir() / "grover.csv").string();
    const RunResult run =
        run_cli("--out " + out_path + " grover --qubits 2 --marked 3 --iterations 1");
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.output.empty());
    const Table table = parse_table(read_file(out_path), Format::Csv);
    REQUIRE(table.name == "grover");
    REQUIRE(table.rows.size() == 2);

    SECTION("an unwritable path is a configuration error") {
        REQUIRE(run_cli("--out /no/such/dir/x.csv sweep").exit_code == 2);
    }
}

TEST_CASE("cheat reports detection figures and reference disagreements", "[cli]") {
    SECTION("the uniform guess family") {
        const RunResult run =
            run_cli("cheat " + survey_scenario() + " --strategy guess-diffusion");
        REQUIRE(run.exit_code == 3);
        const Table table = parse_table(run.output, Format::Csv);
        REQUIRE(cell_string(table, 0, "strategy") == "guess-diffusion");
        REQUIRE(cell_double(table, 0, "exact_detection") == Approx(0.75).margin(1e-12));
        REQUIRE(cell_int(table, 0, "guess_space") == 256);
        REQUIRE(cell_int(table, 0, "marked_space") == 1820);
        REQUIRE(cell_string(table, 0, "reference_quantity") == "detection");
        REQUIRE(cell_string(table, 0, "reference_value") == "11/16");
        REQUIRE(cell_string(table, 0, "reference_match") == "differs");
    }
    SECTION("the uniform forgery family") {
        const RunResult run =
            run_cli("cheat " + survey_scenario() + " --strategy intercept-resend");
        REQUIRE(run.exit_code == 3);
        const Table table = parse_table(run.output, Format::Csv);
        REQUIRE(cell_double(table, 0, "exact_undetected") == Approx(0.25).margin(1e-12));
        REQUIRE(cell_string(table, 0, "reference_quantity") == "undetected");
        REQUIRE(cell_string(table, 0, "reference_value") == "1/728");
        REQUIRE(cell_string(table, 0, "reference_match") == "differs");
    }
    SECTION("capturing and measuring immediately") {
        const RunResult run = run_cli("cheat " + survey_scenario() +
                                      " --strategy capture-all --policy measure-immediately");
        REQUIRE(run.exit_code == 3);
        const Table table = parse_table(run.output, Format::Csv);
        REQUIRE(cell_double(table, 0, "exact_detection") == Approx(0.75).margin(1e-12));
        REQUIRE(cell_string(table, 0, "reference_value") == "11/16");
    }
    SECTION("an honest run raises no signal and cites no reference") {
        const RunResult run = run_cli("cheat " + survey_scenario());
        REQUIRE(run.exit_code == 0);
        const Table table = parse_table(run.output, Format::Csv);
        REQUIRE(cell_string(table, 0, "strategy") == "honest");
        REQUIRE(cell_double(table, 0, "exact_detection") == Approx(0.0).margin(1e-12));
        REQUIRE(cell_string(table, 0, "reference_quantity").empty());
    }
    SECTION("a correct guess decodes invisibly and exits clean") {
        const RunResult run = run_cli("cheat " + survey_scenario() +
                                      " --strategy guess-diffusion --guess "
                                      "plus,plus,plus,plus");
        REQUIRE(run.exit_code == 0);
        const Table table = parse_table(run.output, Format::Csv);
        REQUIRE(cell_double(table, 0, "exact_detection") == Approx(0.0).margin(1e-12));
        REQUIRE(cell_string(table, 0, "reference_quantity").empty());
    }
    SECTION("identical invocations are byte-identical") {
        const std::string args = "cheat " + guessing_scenario();
        REQUIRE(run_cli(args).output == run_cli(args).output);
    }
}
