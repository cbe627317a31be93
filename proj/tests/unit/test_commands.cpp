#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "comrade/commands.hpp"
#include "comrade/io.hpp"
#include "comrade/oracle.hpp"
#include "test_support.hpp"

using namespace comrade;
using namespace comrade::testing;

namespace {

struct Capture {
    std::ostringstream out;
    std::ostringstream err;
    cli::Streams streams() { return {out, err}; }
};

std::filesystem::path temp(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("comrade_cmd_" + name);
}

std::filesystem::path fixture(const std::string& name, const ComradeMatrix& c) {
    const auto path = temp(name);
    io::write_matrix(c, path);
    return path;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("det prints exact determinants") {
    Capture a;
    CHECK(cli::cmd_det(fixture("e32.json", example3_2()), ScalarMode::symbolic, a.streams()) == cli::ok);
    CHECK(a.out.str() == "24\n");

    Capture b;
    CHECK(cli::cmd_det(fixture("e31.json", example3_1()), ScalarMode::exact, b.streams()) == cli::ok);
    CHECK(b.out.str() == "-1/45\n");
}

TEST_CASE("default mode retries in symbolic mode once") {
    Capture c;
    CHECK(cli::cmd_det(fixture("e32.json", example3_2()), std::nullopt, c.streams()) == cli::ok);
    CHECK(c.out.str() == "24\n");
    CHECK(c.err.str().find("retrying in symbolic mode") != std::string::npos);

    Capture d;
    CHECK(cli::cmd_det(fixture("e32.json", example3_2()), ScalarMode::exact, d.streams()) == cli::zero_pivot);
    CHECK(d.err.str().find("retry in symbolic mode") != std::string::npos);
}

TEST_CASE("check prints an exact zero residual") {
    Capture c;
    CHECK(cli::cmd_check(fixture("e32.json", example3_2()), std::nullopt, c.streams()) == cli::ok);
    CHECK(c.out.str() == "0\n");
}

TEST_CASE("inv writes a dense file that inverts the input") {
    for (const ComradeMatrix& m : {example3_1(), example3_2(), example33(12), identity_embedding()}) {
        Capture c;
        const auto out = temp("inv_out.json");
        REQUIRE(cli::cmd_inv(fixture("inv_in.json", m), out, std::nullopt, c.streams()) == cli::ok);
        const auto inv = io::read_dense(out);
        CHECK(inv * to_dense(m) == DenseMatrix<Rational>::identity(m.order()));
        CHECK(c.out.str().find("determinant: ") != std::string::npos);
    }
    Capture s;
    REQUIRE(cli::cmd_inv(fixture("inv_in.json", example3_2()), temp("inv_out.json"), std::nullopt, s.streams()) ==
            cli::ok);
    CHECK(s.out.str() == "mode: symbolic\ndeterminant: 24\nsubstitution: mu_1 := t\nop_count: 81\n");
}

TEST_CASE("float inverse is written as exact dyadic rationals") {
    Capture c;
    const auto out = temp("inv_float.json");
    REQUIRE(cli::cmd_inv(fixture("e31.json", example3_1()), out, ScalarMode::floating, c.streams()) == cli::ok);
    const auto inv = io::read_dense(out);
    const auto exact = oracle::dense_invert(to_dense(example3_1()));
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            CHECK(inv(i, j).to_double() == doctest::Approx(exact(i, j).to_double()));
        }
    }
}

TEST_CASE("exit codes") {
    Capture singular;
    const ComradeMatrix sing = make_comrade(4, qs({"1", "2", "3", "4"}), qs({"1", "1", "2"}), qs({"1", "0", "6"}),
                                            qs({"0", "0"}));
    CHECK(cli::cmd_inv(fixture("sing.json", sing), temp("sing_out.json"), std::nullopt, singular.streams()) ==
          cli::singular);
    CHECK(singular.err.str() == "error: matrix is singular\n");

    const auto bad = temp("bad.json");
    std::ofstream(bad) << R"({"n":2,"beta":["1","1"],"alpha":["1"],"gamma":["1"],"a":[]})";
    Capture order;
    CHECK(cli::cmd_det(bad, std::nullopt, order.streams()) == cli::parse_error);

    const auto broken = temp("broken.json");
    std::ofstream(broken) << "{";
    Capture parse;
    CHECK(cli::cmd_check(broken, std::nullopt, parse.streams()) == cli::parse_error);

    Capture missing;
    CHECK(cli::cmd_det(temp("does_not_exist.json"), std::nullopt, missing.streams()) == cli::parse_error);
}

TEST_CASE("gen is deterministic") {
    Capture c;
    const auto a = temp("gen_a.json");
    const auto b = temp("gen_b.json");
    CHECK(cli::cmd_gen(bench::Family::random, 5, 1, 0.0, a, c.streams()) == cli::ok);
    CHECK(cli::cmd_gen(bench::Family::random, 5, 1, 0.0, b, c.streams()) == cli::ok);
    CHECK(slurp(a) == slurp(b));

    const auto e = temp("gen_e33.json");
    CHECK(cli::cmd_gen(bench::Family::example33, 4, 0, 0.0, e, c.streams()) == cli::ok);
    const auto d = to_dense(io::read_matrix(e));
    CHECK(std::vector<Rational>(d.row(3).begin(), d.row(3).end()) == qs({"-1/2", "-1/2", "0", "-2"}));

    Capture small;
    CHECK(cli::cmd_gen(bench::Family::example33, 2, 0, 0.0, e, small.streams()) == cli::parse_error);
}

TEST_CASE("bench writes the CSV header and one row per size") {
    Capture c;
    bench::BenchOptions options;
    options.sizes = {5, 8};
    options.mode = ScalarMode::exact;
    CHECK(cli::cmd_bench(options, "-", c.streams()) == cli::ok);
    std::istringstream lines(c.out.str());
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,mode,op_count,wall_time_seconds,epsilon");
    std::getline(lines, line);
    CHECK(line.rfind("5,exact,139,", 0) == 0);
    CHECK(line.substr(line.rfind(',') + 1) == "0");
    std::getline(lines, line);
    CHECK(line.rfind("8,exact,397,", 0) == 0);
    CHECK(c.err.str().find("oracle baseline n=5") != std::string::npos);
}
