// Copyright 2026 The fermiqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "fermiqi/text_format.hpp"

using fermiqi::cli::run;

namespace {

std::string fixture(const std::string &name) {
    return std::string(FERMIQI_FIXTURE_DIR) + "/" + name;
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(cli, no_arguments_is_usage_error) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"frobnicate"}).code, 1);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(cli, check_exit_codes) {
    auto psi = invoke({"check", "--state", fixture("psi_ab.state")});
    EXPECT_EQ(psi.code, 2);
    EXPECT_TRUE(contains(psi.out, "Violation: mixes even and odd sectors")) << psi.out;

    EXPECT_EQ(invoke({"check", "--state", fixture("phi_abc.state")}).code, 2);

    for (const char *name : {"bell_even.state", "omega_vacuum.state", "omega_dirac.state"}) {
        auto ok = invoke({"check", "--state", fixture(name)});
        EXPECT_EQ(ok.code, 0) << name;
        EXPECT_TRUE(contains(ok.out, "parity: even")) << ok.out;
        EXPECT_TRUE(contains(ok.out, "ssr: Valid"));
    }
    for (const char *name : {"unruh_r0.rho", "unruh_r_pi8.rho", "unruh_r_pi4.rho", "diagonal.rho"}) {
        EXPECT_EQ(invoke({"check", "--rho", fixture(name)}).code, 0) << name;
    }

    auto empty = invoke({"check", "--state", fixture("empty.state")});
    EXPECT_EQ(empty.code, 1);
    EXPECT_TRUE(contains(empty.err, "line 1")) << empty.err;
    EXPECT_EQ(invoke({"check", "--state", fixture("missing.state")}).code, 1);
    EXPECT_EQ(invoke({"check"}).code, 1);
}

TEST(cli, reorder) {
    auto r = invoke({"reorder", "--state", fixture("psi_ab.state"), "--order", "ba"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(fermiqi::parse_state(r.out), fermiqi::parse_state(fermiqi::read_file(fixture("psi_ba.state"))));
    EXPECT_EQ(invoke({"reorder", "--state", fixture("psi_ab.state"), "--order", "a,z"}).code, 1);
}

TEST(cli, reduce_is_order_independent) {
    auto plain = invoke({"reduce", "--state", fixture("phi_abc.state"), "--trace-out", "c"});
    auto moved = invoke({"reduce", "--state", fixture("phi_abc.state"), "--trace-out", "c", "--order", "acb"});
    ASSERT_EQ(plain.code, 0) << plain.err;
    ASSERT_EQ(moved.code, 0) << moved.err;
    EXPECT_EQ(plain.out, moved.out);
    EXPECT_TRUE(contains(plain.err, "mixes even and odd sectors"));

    auto rho = fermiqi::parse_density(plain.out);
    EXPECT_EQ(rho.order(), fermiqi::ModeOrder({"a", "b"}));
    EXPECT_EQ(rho(1, 2), fermiqi::Complex(0.5));
    EXPECT_EQ(rho(0, 0), fermiqi::Complex(0.0));

    EXPECT_EQ(invoke({"reduce", "--state", fixture("phi_abc.state"), "--trace-out", "z"}).code, 1);
}

TEST(cli, reduce_everything) {
    auto all = invoke({"reduce", "--state", fixture("bell_even.state"), "--trace-out", "a,b"});
    ASSERT_EQ(all.code, 0) << all.err;
    auto rho = fermiqi::parse_density(all.out);
    EXPECT_EQ(rho.dimension(), 1);
    EXPECT_NEAR(rho(0, 0).real(), 1, 1e-15);
}

TEST(cli, measure) {
    auto w = invoke({"measure", "--rho", fixture("unruh_r_pi4.rho"), "--measure", "eof-wootters"});
    ASSERT_EQ(w.code, 0) << w.err;
    double wootters = fermiqi::parse_report(w.out).value;
    EXPECT_NEAR(wootters, 0.601, 1e-3);

    auto s = invoke({"measure", "--rho", fixture("unruh_r_pi4.rho"), "--measure", "eof-roof", "--constraint", "ssr",
                     "--restarts", "4"});
    ASSERT_EQ(s.code, 0) << s.err;
    auto report = fermiqi::parse_report(s.out);
    EXPECT_EQ(report.measure, "eof-roof-ssr");
    EXPECT_GT(report.value, wootters);

    auto n = invoke({"measure", "--rho", fixture("diagonal.rho"), "--measure", "negativity"});
    ASSERT_EQ(n.code, 0);
    EXPECT_EQ(fermiqi::parse_report(n.out).value, 0);

    EXPECT_EQ(invoke({"measure", "--rho", fixture("diagonal.rho"), "--measure", "bogus"}).code, 1);
}

TEST(cli, measure_ssr_violation) {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "fermiqi_cli_violation.rho";
    {
        std::ofstream f(tmp);
        f << "modes: a b\n4\n";
        for (int i = 0; i < 4; i++) {
            for (int j = 0; j < 4; j++) {
                f << "0.25 0 ";
            }
            f << '\n';
        }
    }
    auto r = invoke({"measure", "--rho", tmp.string(), "--measure", "eof-roof", "--constraint", "ssr"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(invoke({"check", "--rho", tmp.string()}).code, 2);
    std::filesystem::remove(tmp);
}

TEST(cli, measure_is_deterministic) {
    std::vector<std::string> args{"measure", "--rho", fixture("unruh_r_pi8.rho"), "--measure", "eof-roof",
                                  "--seed", "7", "--restarts", "4"};
    EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(cli, erasure) {
    auto ppt = invoke({"erasure", "--p", "0.5", "--report", "ppt"});
    ASSERT_EQ(ppt.code, 0);
    EXPECT_TRUE(contains(ppt.out, "-0.25")) << ppt.out;

    auto all = invoke({"erasure", "--p", "1", "--report", "all"});
    ASSERT_EQ(all.code, 0);
    EXPECT_EQ(all.out, "p,neg_eig,negativity,capacity\n1,0,0,0\n");

    auto cap = invoke({"erasure", "--p", "0", "--report", "capacity"});
    EXPECT_EQ(cap.out, "p=0 capacity=1\n");

    EXPECT_EQ(invoke({"erasure", "--p", "1.5", "--report", "all"}).code, 1);
    EXPECT_EQ(invoke({"erasure", "--p", "0.5", "--report", "nope"}).code, 1);
}

TEST(cli, unruh_curve) {
    auto dir = std::filesystem::temp_directory_path();
    auto first = dir / "fermiqi_curve_1.csv";
    auto second = dir / "fermiqi_curve_2.csv";
    for (const auto &path : {first, second}) {
        auto r = invoke({"unruh-curve", "--samples", "2", "--seed", "3", "--restarts", "4", "--out", path.string()});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    std::string body = slurp(first);
    EXPECT_EQ(body, slurp(second));

    std::istringstream lines(body);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "r,eof_wootters,eof_ssr,gap");
    std::vector<std::vector<double>> rows;
    while (std::getline(lines, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_NEAR(rows[0][1], 1, 1e-9);
    EXPECT_NEAR(rows[0][2], 1, 1e-9);
    EXPECT_NEAR(rows[0][3], 0, 1e-9);
    EXPECT_GT(rows[1][3], 0);
    std::filesystem::remove(first);
    std::filesystem::remove(second);

    EXPECT_EQ(invoke({"unruh-curve", "--samples", "2", "--out", "/nonexistent-dir/x.csv"}).code, 1);
    EXPECT_EQ(invoke({"unruh-curve", "--samples", "1", "--out", (dir / "x.csv").string()}).code, 1);
}
