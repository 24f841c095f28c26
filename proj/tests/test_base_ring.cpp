#include "ffgs/base_ring.hpp"

#include <doctest.h>

using namespace ffgs;

namespace {

std::vector<BaseRing> all_test_rings() {
    return {BaseRing::fp(2),       BaseRing::fp(3),       BaseRing::fp(5),
            BaseRing::fp_pi(2),    BaseRing::fp_pi(3),    BaseRing::zmod(2, 2),
            BaseRing::zmod(3, 2)};
}

} // namespace

TEST_CASE("ring axioms hold exhaustively on every supported base") {
    for (const BaseRing& R : all_test_rings()) {
        CAPTURE(R.name());
        auto elems = R.all_elements();
        CHECK(elems.size() == R.size());
        for (auto a : elems) {
            CHECK(R.add(a, R.zero()) == a);
            CHECK(R.mul(a, R.one()) == a);
            CHECK(R.is_zero(R.add(a, R.neg(a))));
            for (auto b : elems) {
                CHECK(R.add(a, b) == R.add(b, a));
                CHECK(R.mul(a, b) == R.mul(b, a));
                for (auto c : elems) {
                    CHECK(R.add(R.add(a, b), c) == R.add(a, R.add(b, c)));
                    CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
                    CHECK(R.mul(a, R.add(b, c)) == R.add(R.mul(a, b), R.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("units are exactly the elements with nonzero residue") {
    for (const BaseRing& R : all_test_rings()) {
        CAPTURE(R.name());
        size_t units = 0;
        for (auto a : R.all_elements()) {
            bool unit = R.is_unit(a);
            CHECK(unit == (R.residue(a) != 0));
            if (unit) {
                ++units;
                CHECK(R.mul(a, R.inv(a)) == R.one());
            }
        }
        size_t expect = R.length() == 1 ? R.p() - 1 : R.p() * R.p() - R.p();
        CHECK(units == expect);
    }
}

TEST_CASE("the maximal ideal squares to zero") {
    for (const BaseRing& R : all_test_rings()) {
        if (R.length() == 1) continue;
        CAPTURE(R.name());
        CHECK(R.is_zero(R.mul(R.pi(), R.pi())));
        for (auto a : R.all_elements()) {
            bool in_ann = R.annihilates_max_ideal(a);
            // Ann(m) = pi R: a kills pi exactly when a is a multiple of pi.
            bool kills = R.is_zero(R.mul(a, R.pi()));
            CHECK(in_ann == kills);
        }
    }
}

TEST_CASE("pi generates the maximal ideal of Z/p^2") {
    BaseRing Z = BaseRing::zmod(3, 2);
    CHECK(Z.pi() == Z.from_int(3));
    CHECK(Z.is_zero(Z.from_int(9)));
    CHECK(Z.from_int(-1) == Z.from_int(8));
}

TEST_CASE("digit round trips through residue and pi coefficient") {
    for (const BaseRing& R : {BaseRing::fp_pi(2), BaseRing::fp_pi(3)}) {
        CAPTURE(R.name());
        for (uint32_t c0 = 0; c0 < R.p(); ++c0)
            for (uint32_t c1 = 0; c1 < R.p(); ++c1) {
                auto a = R.from_digits(c0, c1);
                CHECK(R.residue(a) == c0);
                // pi_coefficient is defined on pi R only.
                CHECK(R.pi_coefficient(R.sub(a, R.from_int(c0))) == c1);
            }
        CHECK_THROWS(R.pi_coefficient(R.one()));
    }
}

TEST_CASE("from_int reduces mod p along the residue") {
    BaseRing R = BaseRing::fp_pi(3);
    CHECK(R.from_int(10) == R.from_int(1));
    CHECK(R.from_int(-2) == R.from_int(1));
    CHECK(R.is_zero(R.from_int(3))); // 3 = 0 in F_3[pi]/(pi^2), pi is not 3 here
}

TEST_CASE("ring identity and inequality") {
    CHECK(BaseRing::fp_pi(2) == BaseRing::fp_pi(2));
    CHECK(BaseRing::fp_pi(2) != BaseRing::zmod(2, 2));
    CHECK(BaseRing::fp(2) != BaseRing::fp_pi(2));
    CHECK(BaseRing::fp(2).is_field());
    CHECK(!BaseRing::fp_pi(2).is_field());
    CHECK(!BaseRing::zmod(2, 2).is_field());
}
