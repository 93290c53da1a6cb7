#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "amp");
    std::ostringstream out, err;
    const int code = amp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Result run_binary(const std::string& args) {
    const std::string cmd = std::string(AMP_CLI_PATH) + " " + args + " 2>/dev/null";
    Result r{-1, {}, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("enumerate") {
    const auto r = run({"enumerate", "--n", "2", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "F^(1)_2: 2 terms\n  {} = 1/2\n  {1,2} = 1/2\n");

    const auto o = run({"enumerate", "--n", "8", "--k", "3", "--oracle"});
    CHECK(o.code == 0);
    CHECK(o.out.find("PASS oracle-equals-closed-form") != std::string::npos);

    const auto bad = run({"enumerate", "--n", "2", "--k", "3"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("n >= k") != std::string::npos);
}

TEST_CASE("size guards and --force") {
    const auto r = run({"enumerate", "--n", "11", "--k", "1", "--oracle"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--force") != std::string::npos);
    CHECK(run({"pgf", "--n", "501", "--k", "1"}).code == 2);
    const auto forced = run({"--force", "enumerate", "--n", "11", "--k", "1", "--oracle"});
    CHECK(forced.code == 0);
    CHECK(forced.err.find("warning") != std::string::npos);
}

TEST_CASE("pgf and moments") {
    CHECK(run({"pgf", "--n", "3", "--k", "1"}).out == "f^(1)_3(w) coefficients: [1/3, 0, 1/2, 1/6]\n");
    CHECK(run({"pgf", "--n", "1", "--k", "1"}).out == "f^(1)_1(w) coefficients: [1]\n");
    const auto m = run({"pgf", "--n", "3", "--k", "1", "--moments", "2"});
    CHECK(m.out.find("mean = 3/2\nm2 = 5/4\n") != std::string::npos);

    const auto j = run({"pgf", "--n", "3", "--k", "1", "--moments", "2", "--json", "-"});
    const auto report = nlohmann::json::parse(j.out);
    CHECK(report["command"] == "pgf");
    CHECK(report["results"]["coefficients"] == nlohmann::json({"1/3", "0/1", "1/2", "1/6"}));
    CHECK(report["results"]["mean"] == "3/2");
    CHECK(report["results"]["central_moments"][2] == "5/4");
    CHECK(report["exit_code"] == 0);
}

TEST_CASE("JSON reports round-trip and never carry unlabeled floats") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"pgf", "--n", "6", "--k", "2", "--moments", "4", "--json", "-"},
             {"simulate", "--n", "5", "--k", "2", "--trials", "500", "--seed", "3", "--json", "-"},
             {"discover", "--target", "recurrence:1", "--json", "-"},
             {"verify", "--suite", "theorems", "--json", "-"}}) {
        const auto r = run(args);
        CHECK(r.code == 0);
        const auto parsed = nlohmann::ordered_json::parse(r.out);
        CHECK(parsed.dump(2) + "\n" == r.out);
        std::function<void(const nlohmann::ordered_json&, const std::string&)> walk =
            [&](const nlohmann::ordered_json& j, const std::string& key) {
                if (j.is_number_float()) CHECK_MESSAGE(key.ends_with("_float"), key);
                if (j.is_object())
                    for (const auto& [k, v] : j.items()) walk(v, k);
                if (j.is_array())
                    for (const auto& v : j) walk(v, key);
            };
        walk(parsed, "");
    }
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "--suite", "all", "--nmax", "8"}).code == 0);
    CHECK(run({"verify", "--suite", "recurrences", "--nmax", "50"}).code == 0);
    const auto f = run({"verify", "--suite", "moments", "--inject-fault", "variance"});
    CHECK(f.code == 1);
    CHECK(f.out.find("FAIL harmonic-moment-closed-forms: ") != std::string::npos);
    CHECK(run({"verify", "--suite", "recurrences", "--inject-fault", "recurrence-k1"}).code == 1);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
}

TEST_CASE("discover") {
    const auto v = run({"discover", "--target", "moment:2"});
    CHECK(v.code == 0);
    CHECK(v.out.find("m2 = (n*Hn[1]-n*Hn[2]+2*Hn[1])/n") != std::string::npos);

    const auto rec = run({"discover", "--target", "recurrence:1", "--order", "2"});
    CHECK(rec.code == 0);
    CHECK(rec.out.find("c_1 = (-2*n-w-1)/(n+2)") != std::string::npos);
    CHECK(rec.out.find("PASS equivalent-to-builtin") != std::string::npos);

    const auto none = run({"discover", "--target", "moment:2", "--deg", "0"});
    CHECK(none.code == 3);
    CHECK(none.out.find("unknowns") != std::string::npos);
    CHECK(run({"discover", "--target", "recurrence:1", "--order", "1"}).code == 3);
    CHECK(run({"discover", "--target", "moment"}).code == 2);
}

TEST_CASE("simulate is reproducible and writes CSV") {
    const std::vector<std::string> args{"simulate", "--n", "2", "--k", "1", "--trials", "100000", "--seed", "7"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    auto threaded = args;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(run(threaded).out == a.out);

    const auto j = nlohmann::json::parse(run({"simulate", "--n", "2", "--k", "1", "--trials", "100000", "--seed",
                                              "7", "--json", "-"})
                                             .out);
    CHECK(std::abs(j["results"]["frequencies_float"][2].get<double>() - 0.5) < 0.01);

    const std::string csv = "amp_cli_test.csv";
    CHECK(run({"simulate", "--n", "3", "--k", "1", "--trials", "10", "--seed", "1", "--csv", csv}).code == 0);
    const auto text = slurp(csv);
    CHECK(text.rfind("l,frequency,frequency_float\n0,", 0) == 0);
    std::remove(csv.c_str());

    CHECK(run({"simulate", "--n", "3", "--k", "1", "--trials", "0", "--seed", "1"}).code == 2);
}

TEST_CASE("argument errors map to exit code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"pgf", "--n", "3"}).code == 2);
    CHECK(run({"pgf", "--n", "x", "--k", "1"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary honours the same contract") {
    const auto a = run_binary("simulate --n 10 --k 1 --trials 100000 --seed 1");
    const auto b = run_binary("simulate --n 10 --k 1 --trials 100000 --seed 1");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run_binary("enumerate --n 2 --k 3").code == 2);
    CHECK(run_binary("discover --target moment:2 --deg 0").code == 3);
    CHECK(run_binary("verify --suite moments --inject-fault variance").code == 1);

    const std::string path = "amp_cli_test_report.json";
    CHECK(run_binary("pgf --n 4 --k 2 --moments 3 --json " + path).code == 0);
    const auto text = slurp(path);
    CHECK(nlohmann::ordered_json::parse(text).dump(2) + "\n" == text);
    std::remove(path.c_str());
}
