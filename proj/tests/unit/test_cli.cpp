#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = diatomic::cli::run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string line(std::vector<std::string> args) {
    Run r = run(std::move(args));
    REQUIRE(r.status == 0);
    return r.out;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("stern") {
    CHECK(line({"stern", "5"}) == "3\n");
    CHECK(line({"stern", "--sdi", "6", "51"}) == "12\n");
    CHECK(line({"stern", "0"}) == "0\n");
    Run bad = run({"stern", "x"});
    CHECK(bad.status == 2);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("SyntaxError") != std::string::npos);
    CHECK(run({"stern", "--sdi", "2", "5"}).status == 2);
    CHECK(run({"stern", "--sdi", "3"}).status == 2);
    CHECK(run({"stern", "-4"}).status == 2);
}

TEST_CASE("design commands") {
    CHECK(line({"design", "from-ratio", "7/3"}) == "11001\n");
    CHECK(line({"design", "from-ratio", "inf"}) == "1t\n");
    CHECK(line({"design", "theta", "11001"}) == "25/32\n");
    CHECK(line({"design", "theta", "1(10)"}) == "5/6\n");
    CHECK(line({"design", "of-theta", "2/3"}) == "(10)\n");
    CHECK(line({"design", "compose", "10", "101"}) == "10101\n");
    CHECK(line({"design", "compose", "0", "(01)"}) == "0(01)\n");
    CHECK(line({"design", "conj", "1(10)"}) == "0(01)\n");
    CHECK(line({"design", "inv", "110"}) == "011\n");
    CHECK(line({"design", "runs", "11001"}) == "2 2 1\n");
    CHECK(run({"design", "from-ratio", "0/0"}).status == 2);
    CHECK(run({"design", "inv", "1(10)"}).status == 2);
    CHECK(run({"design", "theta", "10x"}).status == 2);
    CHECK(run({"design", "of-theta", "3/2"}).status == 2);
}

TEST_CASE("matrix commands") {
    CHECK(line({"matrix", "of-design", "10101"}) == "5,8;3,5\n");
    CHECK(line({"matrix", "to-design", "5,7;2,3"}) == "11001\n");
    CHECK(line({"matrix", "apply", "5,7;2,3", "inf"}) == "5/2\n");
    Run singular = run({"matrix", "to-design", "2,2;1,1"});
    CHECK(singular.status == 2);
    CHECK(singular.err.find("NotUnimodular") != std::string::npos);
    CHECK(run({"matrix", "to-design", "1,-1;0,1"}).err.find("NegativeEntry") != std::string::npos);
}

TEST_CASE("assembly commands") {
    CHECK(line({"assembly", "eval", "1/2"}) == "1\n");
    CHECK(line({"assembly", "eval", "25/32"}) == "7/3\n");
    CHECK(line({"assembly", "eval", "1/3"}) == "-1/2 + 1/2*sqrt(5)\n");
    CHECK(line({"assembly", "inverse", "7/3"}) == "11001 theta=25/32\n");
    CHECK(line({"assembly", "qm-inverse", "5/8"}) == "3/5\n");
    CHECK(line({"assembly", "enclose", "1001100110011001", "--n", "12"}) == "[140/99, 99/70]\n");

    std::string csv = line({"assembly", "sample", "--grid", "3", "--csv"});
    std::istringstream rows(csv);
    std::string header;
    std::getline(rows, header);
    CHECK(header == "theta_num,theta_den,val_num,val_den");
    std::vector<double> values;
    for (std::string row; std::getline(rows, row);) {
        long long tn, td, vn, vd;
        char c;
        std::istringstream fields(row);
        fields >> tn >> c >> td >> c >> vn >> c >> vd;
        values.push_back(static_cast<double>(vn) / static_cast<double>(vd));
    }
    CHECK(values.size() == 8);
    CHECK(std::is_sorted(values.begin(), values.end(), std::less_equal<double>()));
    CHECK(std::adjacent_find(values.begin(), values.end()) == values.end());
}

TEST_CASE("quadratic commands") {
    CHECK(line({"quad", "sqrt", "2"}) == "period=(1001) equation: x^2 - 2 = 0\n");
    CHECK(line({"quad", "from-period", "10"}) == "x^2 - x - 1 = 0\n");
    CHECK(line({"quad", "classify", "1001"}) == "type=2\n");
    CHECK(line({"quad", "purity", "5/6"}) == "non-pure\n");
    CHECK(line({"quad", "purity", "3/5"}) == "pure\n");
    CHECK(line({"quad", "purity", "5/8"}) == "rational\n");
    Run square = run({"quad", "sqrt", "9/4"});
    CHECK(square.status == 2);
    CHECK(square.err.find("PerfectSquare") != std::string::npos);
    CHECK(run({"quad", "from-period", "111"}).err.find("InvalidPeriod") != std::string::npos);
}

TEST_CASE("derivative commands") {
    CHECK(line({"deriv", "classify", "1/2"}) == "diverges-to-infinity\n");
    CHECK(line({"deriv", "classify", "2/3"}) == "zero-if-differentiable\n");
    std::string rows = line({"deriv", "scan", "1/2", "--side", "right", "--jmax", "3"});
    CHECK(count_lines(rows) == 3);
    CHECK(line({"deriv", "scan", "1/2", "--side", "right", "--jmax", "3", "--csv"}) == "j,quotient\n1,inf\n2,4\n3,4\n");
    CHECK(run({"deriv", "scan", "1/2", "--side", "up"}).status == 2);
    CHECK(run({"deriv", "classify", "0"}).status == 2);
}

TEST_CASE("json output") {
    auto j = nlohmann::json::parse(line({"--json", "quad", "sqrt", "2/5"}));
    CHECK(j["design"] == "(01011010)");
    CHECK(j["theta"] == "6/17");
    CHECK(j["coefficients"] == nlohmann::json({"5", "0", "-2"}));
    CHECK(j["root"] == "1/5*sqrt(10)");
    j = nlohmann::json::parse(line({"--json", "assembly", "inverse", "7/3"}));
    CHECK(j["design"] == "11001");
    // the printed design parses back to the same value
    CHECK(line({"design", "theta", j["design"].get<std::string>()}) == j["theta"].get<std::string>() + "\n");
    j = nlohmann::json::parse(line({"--json", "deriv", "scan", "1/2", "--jmax", "2"}));
    CHECK(j["samples"].size() == 2);
    CHECK(j["samples"][0]["quotient"] == "inf");
}

TEST_CASE("usage") {
    Run help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("stern") != std::string::npos);
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    CHECK(run({"design"}).status == 2);
    CHECK(run({"assembly", "sample"}).status == 2);
    // deterministic output
    CHECK(line({"assembly", "sample", "--grid", "6"}) == line({"assembly", "sample", "--grid", "6"}));
}
