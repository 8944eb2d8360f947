#include "doctest.h"

#include "ptscatter/report.hpp"

#include <cmath>
#include <limits>

using namespace ptscatter;
using namespace ptscatter::report;

TEST_CASE("number formatting") {
    CHECK(format_number(1.0) == "1.00000000000000e+00");
    CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
    CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_number(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_number(0.1).size() == 20);  // 15 significant digits
}

TEST_CASE("scan csv round trip") {
    analysis::ScanTable table;
    table.rows.push_back({0.1, 1.25e-7, 3.5, 0.999999, -1e-6, false});
    table.rows.push_back({0.2, std::numeric_limits<double>::infinity(), 0.25, 1e-12,
                          std::numeric_limits<double>::infinity(), true});
    const std::string csv = scan_csv(table);
    CHECK(csv.rfind("epsilon,R_left,R_right,T,defect,singular\n", 0) == 0);
    CHECK(csv.find("inf") != std::string::npos);
    CHECK(csv.back() == '\n');
    CHECK(csv.find("\r") == std::string::npos);

    const auto rows = parse_scan_csv(csv);
    REQUIRE(rows.size() == 2);
    CHECK(std::abs(rows[0].R_left - 1.25e-7) <= 4e-15 * 1.25e-7);
    CHECK(std::abs(rows[0].epsilon - 0.1) <= 4e-16);
    CHECK(std::isinf(rows[1].R_left));
    CHECK(rows[1].singular);
    CHECK(!rows[0].singular);
}

TEST_CASE("features json") {
    analysis::FeatureScan empty;
    CHECK(features_json(empty) == "[]\n");

    analysis::FeatureScan one;
    one.points.push_back({analysis::FeatureKind::InvisibleLeft, 4.788, 1e-12, true, false});
    const std::string text = features_json(one);
    CHECK(text.find("\"kind\": \"invisible_left\"") != std::string::npos);
    CHECK(text.find("\"epsilon\": 4.788") != std::string::npos);
    CHECK(text.find("\"refined\": true") != std::string::npos);
    CHECK(text.find("\"residual\"") != std::string::npos);
}

TEST_CASE("job config json round trip") {
    JobConfig job;
    job.command = "scan";
    job.case_name = "mu-imag";
    job.v = 3.54;
    job.mu = 1.11;
    job.eps_min = 0.1;
    job.eps_max = 10.0;
    job.steps = 2000;
    job.out = "scan.csv";
    job.format = "csv";
    job.seed = 77;
    const JobConfig back = job_from_json(job_to_json(job));
    CHECK(back == job);
    const JobConfig back2 = job_from_json(job_to_json(back));
    CHECK(back2 == back);
}

TEST_CASE("svg output is deterministic") {
    analysis::ScanTable table;
    for (int i = 0; i <= 50; ++i) {
        const double eps = 0.1 + i * 0.1;
        table.rows.push_back({eps, std::exp(-eps), 0.5 * std::exp(-eps), 1.0, 0.01, false});
    }
    const std::string a = scan_svg(table, {"R_left", "R_right", "T"}, "test");
    const std::string b = scan_svg(table, {"R_left", "R_right", "T"}, "test");
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("<path") != std::string::npos);

    // singular rows break the path but do not break the writer
    table.rows[10].R_left = std::numeric_limits<double>::infinity();
    table.rows[10].singular = true;
    CHECK_NOTHROW(scan_svg(table, {"R_left"}, "with poles"));
}

TEST_CASE("potential csv and svg") {
    std::vector<PotentialSample> samples;
    for (int i = 0; i <= 20; ++i) {
        const double x = -5.0 + 0.5 * i;
        samples.push_back({x, {-4.0 * std::tanh(x) * std::tanh(x), 0.1 * std::tanh(x)}});
    }
    const std::string csv = potential_csv(samples);
    CHECK(csv.rfind("x,V_re,V_im\n", 0) == 0);
    const std::string svg = potential_svg(samples, "profile");
    CHECK(svg == potential_svg(samples, "profile"));
    CHECK(svg.find("Im V") != std::string::npos);
}
