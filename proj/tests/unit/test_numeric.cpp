#include "doctest.h"

#include "ksi/format.hpp"
#include "ksi/parallel.hpp"
#include "ksi/rational.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

using namespace ksi;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 2).to_string() == "7/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(1, 4).to_double() == 0.25);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("float formatting") {
    CHECK(format_float(0.1) == "0.1");
    CHECK(format_float(2.0 / 3.0) == "0.666666666667");
    CHECK(format_float(1e-7) == "1e-07");
    CHECK(format_float(123456789012345.0) == "1.23456789012e+14");
    CHECK(format_float(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_float(-std::numeric_limits<double>::infinity()) == "-inf");
    CHECK(format_float_exact(0.1) == "0.1");
    CHECK(format_float_exact(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("parallel_for covers every index once and rethrows") {
    for (unsigned threads : {1U, 2U, 5U, 16U}) {
        std::vector<int> hits(103, 0);
        parallel_for(hits.size(), threads, [&](std::size_t i) { ++hits[i]; });
        for (int h : hits) CHECK(h == 1);
    }
    std::atomic<int> count{0};
    parallel_for(0, 4, [&](std::size_t) { ++count; });
    CHECK(count == 0);
    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7) throw std::runtime_error("boom");
                                 }),
                    std::runtime_error);
}
