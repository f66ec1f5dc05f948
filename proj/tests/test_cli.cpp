#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "cli/commands.hpp"
#include "oddbounds/errors.hpp"
#include "oracles.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = oddbounds::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST_CASE("bound prints the exact value first")
{
    auto r = run({"bound", "--family", "Bk", "--k", "1", "--x", "1/4"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "15/11");
    CHECK(first_line(run({"bound", "--family", "Rk", "--k", "4", "--x", "1/4"}).out) == "9364/6875");
    CHECK(first_line(run({"bound", "--family", "corollary1", "--subset", "3", "--x", "1/4"}).out) == "69983/69615");
    CHECK(first_line(run({"bound", "--family", "Ak", "--k", "1", "--x", "9/10"}).out) == "1");

    const auto j = run({"bound", "--family", "th7", "--k", "6", "--x", "1/4", "--format", "json"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.dump().find("88561442/78890625") != std::string::npos);
}

TEST_CASE("domain errors exit with usage status")
{
    const auto r = run({"bound", "--family", "Bk", "--k", "1", "--x", "2/3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("x+x^2 >= 1") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(run({"bound", "--family", "Bk", "--k", "7", "--x", "1/4"}).code == 2);
    CHECK(run({"bound", "--family", "Rk", "--k", "4", "--x", "one"}).code == 2);
    CHECK(run({"bound", "--family", "nope", "--x", "1/4"}).code == 2);
    CHECK(run({"verify", "--max-n", "0"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("enclose")
{
    const auto r = run({"enclose", "--target", "sum", "--x", "1/4", "--terms", "1"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "lo = 4/15");
    const auto p = run({"enclose", "--target", "product", "--x", "1/2", "--terms", "0"});
    CHECK(p.code == 0);
    CHECK(first_line(p.out) == "lo = 1");
    CHECK(p.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("verify")
{
    const auto r = run({"verify", "--suite", "proposition", "--max-k", "10", "--max-n", "500"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS proposition", 0) == 0);
    const auto j = run({"verify", "--suite", "q-le-fib", "--max-n", "50", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(nlohmann::json::accept(j.out));
}

TEST_CASE("qtable JSON rows")
{
    const auto r = run({"qtable", "--max-n", "6", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 6);
    CHECK(doc[5].dump() == R"({"F":8,"Q":{"1":2,"2":1,"4":1},"n":6,"q":4})");
}

TEST_CASE("qtable CSV round trip")
{
    const auto r = run({"qtable", "--max-n", "40", "--max-k", "5", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream in(r.out);
    const auto rows = oddbounds::cli::parse_qtable_csv(in);
    REQUIRE(rows.size() == 40);
    const auto comps = oracle::odd_compositions(40);
    for (int n = 1; n <= 40; ++n) {
        const auto& row = rows[static_cast<std::size_t>(n - 1)];
        CHECK(row.n == static_cast<std::uint64_t>(n));
        CHECK(row.q == oracle::count_distinct(n));
        CHECK(row.fib == comps[static_cast<std::size_t>(n)]);
        REQUIRE(row.q_values.size() == 5);
        if (n <= 20) {
            const auto h = oracle::q_histogram(n);
            for (long k = 1; k <= 5; ++k) {
                const auto it = h.find(mpz_class(k));
                CHECK(row.q_values[static_cast<std::size_t>(k - 1)] ==
                      (it == h.end() ? 0 : static_cast<long long>(it->second)));
            }
        }
    }

    // Closed-form tables leave Q_6 blank: it has no formula.
    const auto closed = run({"qtable", "--max-n", "10", "--max-k", "6", "--source", "closed", "--format", "csv"});
    std::istringstream cin(closed.out);
    const auto crows = oddbounds::cli::parse_qtable_csv(cin);
    CHECK(crows[5].q_values[5] == -1);
    CHECK(crows[5].q_values[3] == 1);

    std::istringstream bad("x,y\n1,2\n");
    CHECK_THROWS_AS((void)oddbounds::cli::parse_qtable_csv(bad), oddbounds::parse_error);
    std::istringstream ragged("n,q,F,Q1\n1,1,1\n");
    CHECK_THROWS_AS((void)oddbounds::cli::parse_qtable_csv(ragged), oddbounds::parse_error);
}

TEST_CASE("report passes and is byte-stable")
{
    const auto a = run({"report", "--x", "1/4"});
    const auto b = run({"report", "--x", "1/4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("FAIL") == std::string::npos);
    const auto csv = run({"report", "--format", "csv"});
    CHECK(csv.code == 0);
    const auto json = run({"report", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(nlohmann::json::accept(json.out));
}
