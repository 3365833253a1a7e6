#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cfire/rootsys.hpp"

using namespace cfire;

namespace {

Weight random_weight(std::mt19937_64& rng, std::size_t n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Weight w = Weight::zero(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = d(rng);
    return w;
}

// All roots as the orbit of the simple roots under simple reflections.
std::set<std::vector<Coord>> root_orbit_oracle(const RootSystem& rs) {
    const std::size_t n = rs.rank();
    std::set<std::vector<Coord>> seen;
    std::vector<std::vector<Coord>> stack;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Coord> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        stack.push_back(e);
    }
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < n; ++i) {
            auto r = rs.reflect_simple_coords(c, i);
            if (seen.insert(r).second) stack.push_back(r);
        }
    }
    return seen;
}

// Rational solve C c = lambda.
RVector solve_oracle(const RootSystem& rs, const Weight& w) {
    RMatrix inv = linalg::inverse(linalg::to_rational(rs.cartan_matrix()));
    RVector c(rs.rank(), Rational(0));
    for (std::size_t i = 0; i < rs.rank(); ++i)
        for (std::size_t j = 0; j < rs.rank(); ++j) c[i] += inv[i][j] * w[j];
    return c;
}

} // namespace

TEST(RootSystemType, RankConstraints) {
    EXPECT_NO_THROW(RootSystemType::parse("A1"));
    EXPECT_NO_THROW(RootSystemType::parse("D3"));
    EXPECT_THROW(RootSystemType::parse("B1"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("C1"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("D2"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("E5"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("E9"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("F3"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("G3"), InvalidArgument);
    EXPECT_THROW(RootSystemType::parse("X2"), InvalidArgument);
    EXPECT_EQ(RootSystemType::parse("e7").str(), "E7");
}

TEST(RootSystem, A2Tables) {
    const auto& rs = root_system("A2");
    EXPECT_EQ(rs.cartan_matrix(), (std::vector<std::vector<Coord>>{{2, -1}, {-1, 2}}));
    EXPECT_EQ(rs.sym(0), 1);
    EXPECT_EQ(rs.sym(1), 1);
    ASSERT_EQ(rs.positive_roots().size(), 3u);
    std::set<std::vector<Coord>> got;
    for (const auto& r : rs.positive_roots()) got.insert(r.simple_coords);
    EXPECT_EQ(got, (std::set<std::vector<Coord>>{{1, 0}, {0, 1}, {1, 1}}));
}

TEST(RootSystem, G2Tables) {
    const auto& rs = root_system("G2");
    std::multiset<Coord> off{rs.cartan(0, 1), rs.cartan(1, 0)};
    EXPECT_EQ(off, (std::multiset<Coord>{-1, -3}));
    EXPECT_EQ(rs.positive_roots().size(), 6u);
    EXPECT_EQ(rs.highest_root().simple_coords, (std::vector<Coord>{3, 2}));
}

TEST(RootSystem, E8HighestRoot) {
    const auto& rs = root_system("E8");
    EXPECT_EQ(rs.positive_roots().size(), 120u);
    EXPECT_EQ(rs.highest_root().weight_image, Weight({0, 0, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(root_orbit_oracle(rs).size(), 240u);
}

TEST(RootSystem, StructuralCountsAllTypes) {
    for (auto t : all_types(8)) {
        const auto& rs = root_system(t);
        SCOPED_TRACE(t.str());
        EXPECT_EQ(rs.positive_roots().size(), expected_positive_root_count(t));
        EXPECT_EQ(root_orbit_oracle(rs).size(), 2 * expected_positive_root_count(t));
        EXPECT_EQ(static_cast<Coord>(rs.minuscule().size()) + 1, rs.det());
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            EXPECT_EQ(rs.cartan(i, i), 2);
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                if (i != j) { EXPECT_LE(rs.cartan(i, j), 0); }
                EXPECT_EQ(rs.sym(i) * rs.cartan(i, j), rs.sym(j) * rs.cartan(j, i));
            }
        }
        EXPECT_TRUE(rs.is_dominant(rs.highest_root().weight_image));
        if (t.simply_laced()) {
            int dominant = 0;
            for (const auto& r : rs.positive_roots()) dominant += rs.is_dominant(r.weight_image);
            EXPECT_EQ(dominant, 1);
        }
        for (const auto& r : rs.positive_roots()) {
            // weight_image[j] = sum_i C[j][i] c_i
            for (std::size_t j = 0; j < rs.rank(); ++j) {
                Coord s = 0;
                for (std::size_t i = 0; i < rs.rank(); ++i) s += rs.cartan(j, i) * r.simple_coords[i];
                EXPECT_EQ(r.weight_image[j], s);
            }
            EXPECT_EQ(rs.pairing(r.weight_image, r), 2);
        }
    }
}

TEST(RootSystem, DeterminantsMatchKnownIndices) {
    EXPECT_EQ(root_system("A4").det(), 5);
    EXPECT_EQ(root_system("B3").det(), 2);
    EXPECT_EQ(root_system("C3").det(), 2);
    EXPECT_EQ(root_system("D4").det(), 4);
    EXPECT_EQ(root_system("D5").det(), 4);
    EXPECT_EQ(root_system("E6").det(), 3);
    EXPECT_EQ(root_system("E7").det(), 2);
    EXPECT_EQ(root_system("E8").det(), 1);
    EXPECT_EQ(root_system("F4").det(), 1);
    EXPECT_EQ(root_system("G2").det(), 1);
}

TEST(RootSystem, MinusculeSets) {
    EXPECT_EQ(root_system("A3").minuscule(), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(root_system("B3").minuscule(), (std::vector<std::size_t>{2}));
    EXPECT_EQ(root_system("C3").minuscule(), (std::vector<std::size_t>{0}));
    EXPECT_EQ(root_system("D5").minuscule(), (std::vector<std::size_t>{0, 3, 4}));
    EXPECT_EQ(root_system("E6").minuscule(), (std::vector<std::size_t>{0, 5}));
    EXPECT_EQ(root_system("E7").minuscule(), (std::vector<std::size_t>{6}));
    EXPECT_TRUE(root_system("E8").minuscule().empty());
}

TEST(RootSystem, D3IsA3) {
    const auto& d3 = root_system("D3");
    const auto& a3 = root_system("A3");
    EXPECT_EQ(d3.positive_roots().size(), a3.positive_roots().size());
    EXPECT_EQ(d3.det(), a3.det());
    // D3 node 0 is the A3 middle node.
    EXPECT_EQ(d3.neighbors(0).size(), 2u);
}

TEST(Pairing, Examples) {
    const auto& rs = root_system("A2");
    EXPECT_EQ(rs.pairing({1, 0}, rs.simple_root(1)), 0);
    EXPECT_EQ(rs.pairing({1, 1}, rs.highest_root()), 2);
    const auto& b2 = root_system("B2");
    EXPECT_EQ(b2.simple_root(0).length2, 4);
    EXPECT_EQ(b2.pairing({0, 1}, b2.simple_root(0)), 0);
}

TEST(Pairing, Bilinear) {
    std::mt19937_64 rng(7);
    for (auto t : all_types(5)) {
        const auto& rs = root_system(t);
        for (int k = 0; k < 20; ++k) {
            Weight a = random_weight(rng, rs.rank()), b = random_weight(rng, rs.rank());
            for (const auto& r : rs.positive_roots())
                EXPECT_EQ(rs.pairing(a + b, r), rs.pairing(a, r) + rs.pairing(b, r));
        }
    }
}

TEST(AddRoot, Examples) {
    const auto& rs = root_system("A2");
    EXPECT_EQ(rs.add_root({0, 0}, rs.simple_root(0)), Weight({2, -1}));
    EXPECT_EQ(rs.add_root({1, 0}, rs.simple_root(1)), Weight({0, 2}));
    EXPECT_THROW(rs.make_root({0, 0}), InvalidArgument);
    EXPECT_THROW(rs.make_root({1, -1}), InvalidArgument);
    EXPECT_EQ(rs.make_root({-1, -1}).weight_image, Weight({-1, -1}));
}

TEST(AddRoot, OverflowIsChecked) {
    const auto& rs = root_system("A2");
    Weight big{std::numeric_limits<Coord>::max() - 1, 0};
    EXPECT_THROW(rs.add_root(big, rs.simple_root(0)), OverflowError);
}

TEST(Reflect, Examples) {
    const auto& rs = root_system("A2");
    EXPECT_EQ(rs.reflect_simple({-1, 0}, 0), Weight({1, -1}));
    for (auto t : all_types(6)) {
        const auto& r = root_system(t);
        for (std::size_t i = 0; i < r.rank(); ++i) {
            Weight s = r.reflect_simple(r.rho(), i);
            EXPECT_EQ(s, r.rho() - r.simple_root(i).weight_image);
            EXPECT_EQ(s[i], -1);
        }
    }
}

TEST(Reflect, InvolutionAndSignFlip) {
    std::mt19937_64 rng(11);
    for (auto t : all_types(6)) {
        const auto& rs = root_system(t);
        for (int k = 0; k < 100; ++k) {
            Weight w = random_weight(rng, rs.rank());
            std::size_t i = rng() % rs.rank();
            EXPECT_EQ(rs.reflect_simple(rs.reflect_simple(w, i), i), w);
            EXPECT_EQ(rs.pairing(rs.reflect_simple(w, i), rs.simple_root(i)), -rs.pairing(w, rs.simple_root(i)));
        }
    }
}

TEST(DominantRep, Examples) {
    const auto& a2 = root_system("A2");
    EXPECT_EQ(a2.dominant_rep({-1, 0}), Weight({0, 1}));
    auto [w, word] = a2.dominant_rep_with_word({2, 1});
    EXPECT_EQ(w, Weight({2, 1}));
    EXPECT_TRUE(word.empty());

    const auto& b2 = root_system("B2");
    auto orbit = b2.weyl_orbit({0, -1});
    int dominant = 0;
    for (const auto& o : orbit) {
        if (b2.is_dominant(o)) {
            ++dominant;
            EXPECT_EQ(b2.dominant_rep({0, -1}), o);
        }
    }
    EXPECT_EQ(dominant, 1);
    EXPECT_EQ(b2.weyl_orbit({1, 1}).size(), 8u);
}

TEST(DominantRep, WordReproducesWeight) {
    std::mt19937_64 rng(3);
    const auto& rs = root_system("F4");
    for (int k = 0; k < 50; ++k) {
        Weight w = random_weight(rng, 4, -2, 2);
        auto [d, word] = rs.dominant_rep_with_word(w);
        Weight cur = w;
        for (auto i : word) cur = rs.reflect_simple(cur, i);
        EXPECT_EQ(cur, d);
    }
}

TEST(DominantRep, ConstantOnOrbits) {
    std::mt19937_64 rng(5);
    for (auto t : all_types(6)) {
        const auto& rs = root_system(t);
        for (int k = 0; k < 30; ++k) {
            Weight w = random_weight(rng, rs.rank());
            Weight v = w;
            const int len = static_cast<int>(rng() % 11);
            for (int s = 0; s < len; ++s) v = rs.reflect_simple(v, rng() % rs.rank());
            EXPECT_EQ(rs.dominant_rep(v), rs.dominant_rep(w));
        }
    }
}

TEST(RootLattice, Examples) {
    const auto& a2 = root_system("A2");
    EXPECT_TRUE(a2.in_root_lattice({1, 1}));
    EXPECT_EQ(*a2.integral_root_coords({1, 1}), (std::vector<Coord>{1, 1}));
    EXPECT_FALSE(a2.in_root_lattice({1, 0}));
    EXPECT_EQ(a2.root_coords({1, 0}), (RVector{Rational(2, 3), Rational(1, 3)}));
    for (auto t : all_types(8)) EXPECT_TRUE(root_system(t).in_root_lattice(root_system(t).zero()));
}

TEST(RootLattice, AgreesWithRationalSolve) {
    std::mt19937_64 rng(13);
    for (auto t : all_types(8)) {
        const auto& rs = root_system(t);
        for (int k = 0; k < 20; ++k) {
            Weight w = random_weight(rng, rs.rank());
            RVector c = solve_oracle(rs, w);
            EXPECT_EQ(rs.root_coords(w), c);
            bool integral = std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.denominator() == 1; });
            EXPECT_EQ(rs.in_root_lattice(w), integral);
        }
    }
}

TEST(Permutohedron, Examples) {
    const auto& a2 = root_system("A2");
    EXPECT_TRUE(a2.permutohedron_contains({1, 1}, {0, 0}, false));
    EXPECT_TRUE(a2.permutohedron_contains({1, 1}, {0, 0}, true));
    EXPECT_FALSE(a2.permutohedron_contains({1, 1}, {1, 1}, true));
    EXPECT_TRUE(a2.permutohedron_contains({1, 1}, {-1, -1}, false));
    EXPECT_FALSE(a2.permutohedron_contains({1, 1}, {1, 0}, false));
    EXPECT_THROW(a2.permutohedron_contains({-1, 0}, {0, 0}, false), InvalidArgument);
}

TEST(Permutohedron, DominantPointsMatchBoxEnumeration) {
    for (auto name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
        const auto& rs = root_system(name);
        Weight two_rho = Coord{2} * rs.rho();
        auto pts = rs.dominant_lattice_points(two_rho);
        // Box oracle: dominant mu with coords bounded by those of the
        // highest weight of Pi(2 rho) in any direction.
        std::set<Weight> box;
        const std::size_t n = rs.rank();
        Coord bound = 0;
        for (const auto& r : rs.positive_roots()) bound = std::max(bound, r.height);
        bound *= 2;
        std::vector<Coord> cur(n, 0);
        for (;;) {
            Weight w(cur);
            auto c = rs.integral_root_coords(two_rho - w);
            if (c && std::all_of(c->begin(), c->end(), [](Coord x) { return x >= 0; })) box.insert(w);
            std::size_t i = 0;
            while (i < n && cur[i] == bound) cur[i++] = 0;
            if (i == n) break;
            ++cur[i];
        }
        SCOPED_TRACE(name);
        EXPECT_EQ(std::set<Weight>(pts.begin(), pts.end()), box);
    }
}

TEST(MinusculeRep, Examples) {
    const auto& a2 = root_system("A2");
    EXPECT_EQ(a2.minuscule_rep_of_class({1, 0}), Weight({1, 0}));
    EXPECT_EQ(a2.minuscule_rep_of_class({1, 1}), Weight({0, 0}));
    EXPECT_EQ(root_system("A3").minuscule_rep_of_class({1, 1, 1}), Weight({0, 1, 0}));
}

TEST(Classical, Examples) {
    EXPECT_EQ(root_system("B2").classical_coords({0, 1}), (RVector{Rational(1, 2), Rational(1, 2)}));
    EXPECT_EQ(root_system("C3").classical_coords({0, 0, 1}), (RVector{1, 1, 1}));
    EXPECT_EQ(root_system("A1").classical_coords({1}), (RVector{Rational(1, 2), Rational(-1, 2)}));
    EXPECT_EQ(root_system("D5").classical_coords({0, 0, 0, 1, 0}),
              (RVector{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}));
    EXPECT_THROW(root_system("E6").classical_coords(Weight::zero(6)), InvalidArgument);
}

TEST(Classical, RoundTripAndInnerProducts) {
    std::mt19937_64 rng(17);
    for (auto t : all_types(6)) {
        if (!t.classical()) continue;
        const auto& rs = root_system(t);
        for (int k = 0; k < 100; ++k) {
            Weight w = random_weight(rng, rs.rank());
            EXPECT_EQ(rs.from_classical_coords(rs.classical_coords(w)), w);
        }
        // <lambda, alpha^vee> via the standard inner product.
        auto dot = [](const RVector& a, const RVector& b) {
            Rational s(0);
            for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
            return s;
        };
        for (const auto& a : rs.positive_roots()) {
            RVector va = rs.classical_coords(a.weight_image);
            for (const auto& b : rs.positive_roots()) {
                RVector vb = rs.classical_coords(b.weight_image);
                EXPECT_EQ(Rational(2) * dot(vb, va) / dot(va, va), Rational(rs.pairing(b.weight_image, a)));
            }
        }
    }
}

TEST(ScaledInner, MatchesClassicalRealization) {
    std::mt19937_64 rng(19);
    for (auto t : all_types(5)) {
        if (!t.classical()) continue;
        const auto& rs = root_system(t);
        // Short roots have <alpha, alpha> = 2 in this normalization.
        Rational short_len(0);
        for (const auto& r : rs.positive_roots()) {
            if (r.length2 != 2) continue;
            RVector v = rs.classical_coords(r.weight_image);
            for (auto& x : v) short_len += x * x;
            break;
        }
        const Rational scale = Rational(2) / short_len;
        for (int k = 0; k < 20; ++k) {
            Weight a = random_weight(rng, rs.rank()), b = random_weight(rng, rs.rank());
            RVector va = rs.classical_coords(a), vb = rs.classical_coords(b);
            Rational s(0);
            for (std::size_t i = 0; i < va.size(); ++i) s += va[i] * vb[i];
            EXPECT_EQ(Rational(rs.scaled_inner(a, b)), s * scale * rs.inner_scale());
        }
    }
}
