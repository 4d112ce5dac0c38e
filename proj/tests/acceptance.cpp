// Acceptance suite: every check is exact (integer/rational equality, no
// tolerances). One line per criterion; exit status 0 only if all pass.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "surgcalc/surgcalc.hpp"
#include "support/generators.hpp"

using namespace surgcalc;

namespace {

struct Harness {
    int failures = 0;

    void run(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
        if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

SurgeryDiagram unknot_diagram(long long p, long long q) {
    return SurgeryDiagram({{"U", Slope(p, q), std::nullopt, true}}, IntMatrix(1, 1));
}

SurgeryDiagram rank_one_diagram() {
    std::vector<LinkComponent> comps{{"L1", Slope(1, 2), std::nullopt, false},
                                     {"L2", Slope(2, 1), std::nullopt, false}};
    IntMatrix linking(2, 2);
    linking.at(0, 1) = linking.at(1, 0) = 1;
    return SurgeryDiagram(comps, linking);
}

bool fail(std::string& detail, const std::string& msg) {
    detail = msg;
    return false;
}

}  // namespace

int main() {
    Harness h;

    h.run(1, "tb_new = -1-n for 1/n unknot surgery, linking 1, n in [-10,10]", [](std::string& detail) {
        for (long long n = -10; n <= 10; ++n) {
            if (n == 0) continue;
            const AuxKnot aux{Int(-1), std::nullopt, {Int(1)}};
            const auto res = tb_after_surgery(unknot_diagram(1, n), aux);
            if (!res) return fail(detail, "not nullhomologous at n = " + std::to_string(n));
            if (!(res->value == Rational(-1 - n)))
                return fail(detail, "n = " + std::to_string(n) + ": got " + res->value.to_string());
        }
        return true;
    });

    h.run(2, "tb_new = -1-4n for 1/n unknot surgery, linking 2, n in [-10,10]", [](std::string& detail) {
        for (long long n = -10; n <= 10; ++n) {
            if (n == 0) continue;
            const AuxKnot aux{Int(-1), std::nullopt, {Int(2)}};
            const auto res = tb_after_surgery(unknot_diagram(1, n), aux);
            if (!res) return fail(detail, "not nullhomologous at n = " + std::to_string(n));
            if (!(res->value == Rational(-1 - 4 * n)))
                return fail(detail, "n = " + std::to_string(n) + ": got " + res->value.to_string());
        }
        return true;
    });

    h.run(3, "tb drop of 2 in the Q = [[1,1],[2,2]] diagram, witness-independent", [](std::string& detail) {
        const SurgeryDiagram d = rank_one_diagram();
        testsupport::Rng rng(424203);
        for (long long tb_old : {-1LL, 0LL, 3LL}) {
            const AuxKnot aux{Int(tb_old), std::nullopt, {Int(1), Int(2)}};
            const auto res = tb_after_surgery(d, aux);
            if (!res) return fail(detail, "not nullhomologous");
            if (!(res->value == Rational(tb_old - 2)))
                return fail(detail, "tb_old = " + std::to_string(tb_old) + ": got " + res->value.to_string());
            if (framing_correction(d, aux, {Int(1), Int(0)}) != 2) return fail(detail, "witness (1,0)");
            if (framing_correction(d, aux, {Int(0), Int(1)}) != 2) return fail(detail, "witness (0,1)");
            for (int trial = 0; trial < 20; ++trial) {
                const Int t = testsupport::random_in(rng, -100, 100);
                if (framing_correction(d, aux, {Int(1) + t, -t}) != 2)
                    return fail(detail, "kernel perturbation t = " + t.str());
            }
        }
        return true;
    });

    h.run(4, "k = p and tb_Q = tb_old + q/p for -p/q unknot surgery, 2 <= p <= 12", [](std::string& detail) {
        for (long long p = 2; p <= 12; ++p)
            for (long long q = 1; q < p; ++q) {
                if (gcd(Int(p), Int(q)) != 1) continue;
                for (long long tb_old : {-1LL, -4LL}) {
                    const AuxKnot aux{Int(tb_old), std::nullopt, {Int(1)}};
                    const auto cert = nullhomology(unknot_diagram(-p, q), aux);
                    if (!cert || cert->order != p)
                        return fail(detail, "order != p at p/q = " + std::to_string(p) + "/" + std::to_string(q));
                    const auto res = tbq_after_surgery(unknot_diagram(-p, q), aux);
                    if (!res) return fail(detail, "no tbq");
                    if (!(res->value == Rational(tb_old) + Rational(q, p)))
                        return fail(detail, "tbq mismatch at " + std::to_string(p) + "/" + std::to_string(q) +
                                                ": got " + res->value.to_string());
                }
            }
        return true;
    });

    h.run(5, "H_1 of unknot surgeries: Z_p for |p| <= 20, trivial for S^3, Z for 0-framed",
          [](std::string& detail) {
              for (long long p = -20; p <= 20; ++p)
                  for (long long q : {1LL, 2LL, 3LL}) {
                      if (gcd(Int(p), Int(q)) != 1) continue;
                      const AbelianGroup got = first_homology(unknot_diagram(p, q));
                      AbelianGroup expected;
                      if (p == 0) expected = AbelianGroup{{}, 1};
                      else if (p == 1 || p == -1) expected = AbelianGroup{{}, 0};
                      else expected = AbelianGroup{{Int(p < 0 ? -p : p)}, 0};
                      if (!(got == expected))
                          return fail(detail, "p/q = " + std::to_string(p) + "/" + std::to_string(q) +
                                                  ": got " + got.to_string());
                  }
              if (!first_homology(SurgeryDiagram()).is_trivial()) return fail(detail, "empty diagram");
              return true;
          });

    h.run(6, "conversion 2 + (-1) = 1 and the cosmetic pair L(5,2) ~ L(5,3)", [](std::string& detail) {
        if (!(contact_to_topological(Rational(2), Int(-1)) == Rational(1)))
            return fail(detail, "conversion");
        const auto rep = cosmetic_pair_check(Rational(-3, 2), Rational(-2, 3), Int(-1));
        if (!(rep.lens1 == LensSpace(5, 2))) return fail(detail, "lens1 = " + rep.lens1.to_string());
        if (!(rep.lens2 == LensSpace(5, 3))) return fail(detail, "lens2 = " + rep.lens2.to_string());
        if (!rep.oriented_homeomorphic) return fail(detail, "not oriented homeomorphic");
        if (!lens_homeomorphic(LensSpace(5, 2), LensSpace(5, 3), true))
            return fail(detail, "2 * 3 = 1 (mod 5) criterion");
        return true;
    });

    h.run(7, "spine swap: L(5,2) reversing only; L(p,p-1) preserving for p <= 20", [](std::string& detail) {
        const auto s = spine_swap_symmetry(LensSpace(5, 2));
        if (s.or_preserving || !s.or_reversing)
            return fail(detail, "L(5,2) flags wrong");
        for (long long p = 2; p <= 20; ++p)
            if (!spine_swap_symmetry(LensSpace(p, p - 1)).or_preserving)
                return fail(detail, "L(p,p-1) at p = " + std::to_string(p));
        return true;
    });

    h.run(8, "gluing: q = -pn-1, spine tb_Q = (1/p, -1/p), det -1, contact longitude",
          [](std::string& detail) {
              for (long long n = -5; n <= 5; ++n)
                  for (long long p = 2; p <= 12; ++p) {
                      const auto g = glue_standard_neighborhoods(Int(n), Int(p));
                      std::ostringstream at;
                      at << " at n = " << n << ", p = " << p;
                      if (g.recovered_q != -p * n - 1) return fail(detail, "q" + at.str());
                      if (!(g.tbq_spine1 == Rational(1, p))) return fail(detail, "tbq_spine1" + at.str());
                      if (!(g.tbq_spine2 == Rational(-1, p))) return fail(detail, "tbq_spine2" + at.str());
                      if (g.gluing.determinant() != -1) return fail(detail, "determinant" + at.str());
                      if (!maps_contact_longitude(g.gluing, Int(n)))
                          return fail(detail, "contact longitude" + at.str());
                      if (!(g.lens == LensSpace(p, p - 1))) return fail(detail, "lens" + at.str());
                  }
              return true;
          });

    h.run(9, "Bennequin violation at every point of the scan over [-10,10]", [](std::string& detail) {
        const auto rows = surgery_theorem_scan(Int(-10), Int(10));
        if (rows.size() != 20) return fail(detail, "expected 20 rows, got " + std::to_string(rows.size()));
        for (const ScanRow& r : rows) {
            const Int expected_tb = r.n < 0 ? Int(-r.n - 1) : Int(-1 - 4 * r.n);
            const Rational expected_bound = r.n < 0 ? Rational(-1) : Rational(Int(-2 - 4 * r.n));
            if (r.tb_new != expected_tb || !(r.bound == expected_bound) || !r.violated)
                return fail(detail, "row n = " + r.n.str());
        }
        return true;
    });

    h.run(10, "property suites: SNF, diophantine vs oracles, twist invariance", [](std::string& detail) {
        // SNF on 1000 random matrices
        {
            testsupport::Rng rng(424210);
            for (int trial = 0; trial < 1000; ++trial) {
                const std::size_t m = static_cast<std::size_t>(testsupport::random_in(rng, 0, 4));
                const std::size_t n = static_cast<std::size_t>(testsupport::random_in(rng, 0, 4));
                const IntMatrix a = testsupport::random_matrix(rng, m, n, -5, 5);
                // smith_normal_form re-verifies U*A*V = D, the divisibility
                // chain and unimodularity on every call and throws on failure
                const auto s = smith_normal_form(a);
                if (!(s.u * a * s.v == s.d)) return fail(detail, "SNF identity");
                if (m == n && m > 0) {
                    const Int det = a.determinant();
                    if (det != 0) {
                        Int prod = 1;
                        for (std::size_t i = 0; i < m; ++i) prod *= s.diagonal(i);
                        if (prod != abs(det)) return fail(detail, "SNF determinant product");
                    }
                }
            }
        }
        // diophantine: 200 planted-solvable vs brute force
        {
            testsupport::Rng rng(424211);
            int solvable = 0;
            while (solvable < 200) {
                const std::size_t m = static_cast<std::size_t>(testsupport::random_in(rng, 1, 3));
                const std::size_t n = static_cast<std::size_t>(testsupport::random_in(rng, 1, 3));
                const IntMatrix a = testsupport::random_matrix(rng, m, n, -4, 4);
                const IntVector planted = testsupport::random_vector(rng, n, -3, 3);
                const IntVector b = a * planted;
                const auto sol = solve_diophantine(a, b);
                if (!sol) return fail(detail, "planted instance reported unsolvable");
                if (!(a * sol->particular == b)) return fail(detail, "wrong particular solution");
                if (!testsupport::brute_force_solve(a, b, 3)) return fail(detail, "oracle lost the plant");
                ++solvable;
            }
        }
        // diophantine: 200 Cramer-certified unsolvable
        {
            testsupport::Rng rng(424212);
            int unsolvable = 0;
            while (unsolvable < 200) {
                const std::size_t n = static_cast<std::size_t>(testsupport::random_in(rng, 1, 3));
                const IntMatrix a = testsupport::random_matrix(rng, n, n, -4, 4);
                if (a.determinant() == 0) continue;
                const IntVector b = testsupport::random_vector(rng, n, -6, 6);
                const auto rational = testsupport::cramer_solve(a, b);
                if (!rational) return fail(detail, "cramer failed on nonsingular matrix");
                bool integral = true;
                for (const Rational& x : *rational) integral = integral && x.is_integer();
                if (integral) continue;
                if (solve_diophantine(a, b)) return fail(detail, "solver solved a Cramer-unsolvable system");
                ++unsolvable;
            }
        }
        // 200 random decorated diagrams: twist invariance + composition
        {
            testsupport::Rng rng(424213);
            int checked = 0;
            while (checked < 200) {
                const auto rd = testsupport::random_decorated_diagram(rng);
                const Int n = testsupport::random_in(rng, -3, 3);
                if (n == 0) continue;
                const auto moved = rolfsen_twist(rd.diagram, rd.aux, TwistSpec{rd.unknot_index, n});
                if (!(first_homology(moved.diagram) == first_homology(rd.diagram)))
                    return fail(detail, "twist changed H_1");
                const auto before = nullhomology(rd.diagram, rd.aux);
                const auto after = nullhomology(moved.diagram, *moved.aux);
                if (static_cast<bool>(before) != static_cast<bool>(after))
                    return fail(detail, "twist changed torsion-ness");
                if (before && after) {
                    if (before->order != after->order) return fail(detail, "twist changed the order");
                    const auto tb_before = tbq_after_surgery(rd.diagram, rd.aux);
                    const auto tb_after = tbq_after_surgery(moved.diagram, *moved.aux);
                    if (!(tb_before->value == tb_after->value)) return fail(detail, "twist changed tb");
                }
                for (std::size_t j = 0; j < rd.diagram.size(); ++j) {
                    if (j == rd.unknot_index) continue;
                    const auto c_before = rd.diagram.component(j).contact();
                    const auto c_after = moved.diagram.component(j).contact();
                    if (c_before && c_after && !(*c_before == *c_after))
                        return fail(detail, "twist changed a contact coefficient");
                }
                const auto back = rolfsen_twist(moved.diagram, moved.aux, TwistSpec{rd.unknot_index, -n});
                if (!(back.diagram == rd.diagram) || !back.aux || !(*back.aux == rd.aux))
                    return fail(detail, "twist followed by inverse twist is not the identity");
                ++checked;
            }
        }
        return true;
    });

    if (h.failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << h.failures << " criteria failed\n";
    return 1;
}
