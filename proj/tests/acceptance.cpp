// Acceptance suite: every computationally checkable pipeline guarantee, run
// at full census scale (p <= 99), one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "tbk/census.hpp"
#include "tbk/dihedral.hpp"
#include "tbk/report_json.hpp"
#include "tbk/verdict.hpp"

using namespace tbk;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << n << "] " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!pass) ++failures;
}

struct Rng {
    std::uint64_t s = 0x5851f42d4c957f2dULL;
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

int main() {
    constexpr long kMaxP = 99;

    // Criteria 1-3 and 6-8 share one single-threaded census pass.
    auto t0 = std::chrono::steady_clock::now();
    std::vector<KnotReport> reports;
    for (const auto& k : enumerate_census(kMaxP)) reports.push_back(analyze(k.p, k.q));
    double census_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    {  // 1: squarefreeness mod 2 at census scale
        long violations = 0;
        for (const auto& r : reports)
            if (!r.mod2_squarefree) ++violations;
        std::ostringstream d;
        d << reports.size() << " knots, " << violations << " violations, "
          << static_cast<long>(census_seconds) << "s single-threaded";
        criterion(1, "Lambda mod 2 squarefree for every knot with p <= 99",
                  violations == 0 && census_seconds < 180.0, d.str());
    }

    {  // 2: degree law
        long bad = 0;
        for (const auto& r : reports)
            if (!r.riley_computed || r.riley.lambda.degree() != (r.knot.p - 1) / 2) ++bad;
        criterion(2, "deg Lambda = (p-1)/2 for 100% of the census",
                  bad == 0, std::to_string(reports.size()) + " knots checked");
    }

    {  // 3: odd discriminants and certified Q(i) exclusion
        long factors = 0, bad = 0;
        for (const auto& r : reports) {
            for (const auto& fr : r.factors) {
                ++factors;
                if (!fr.field.disc_odd) ++bad;
                if (fr.field.qi.status != SqrtStatus::CertifiedAbsent) ++bad;
            }
        }
        criterion(3, "disc odd and qi_exclusion CertifiedAbsent for every factor",
                  bad == 0, std::to_string(factors) + " factors, " + std::to_string(bad) +
                                " exceptions");
    }

    {  // 4: figure-eight golden values
        KnotReport r = analyze(5, 3);
        bool ok = r.riley_computed && r.riley.lambda == PolyZ({1, -1, 1});
        ok = ok && r.factors.size() == 1;
        std::string why;
        if (ok) {
            const auto& fr = r.factors[0];
            auto check = [&](bool c, const char* what) {
                if (!c) {
                    ok = false;
                    why += std::string(why.empty() ? "" : "; ") + what;
                }
            };
            check(fr.field.disc == -3, "disc");
            check(fr.field.two_split == std::vector<int>({2}), "two_splitting");
            check(r.mod2_images.size() == 1 && r.mod2_images[0].m == 5, "m=5");
            check(fr.cusp.g0.rep == to_polyq(PolyZ({1, -2})), "g0=1-2y");
            check((fr.cusp.g0 * fr.cusp.g0).rep == PolyQ::constant(BigRat(-3)), "g0^2=-3");
            check(fr.cusp.cusp_degree == 2, "cusp degree 2");
            check(fr.field.sqrtm3.status == SqrtStatus::PresentWitness, "sqrt(-3) witness");
            PolyZ cusp_mp = to_polyz_exact(fr.cusp.cusp_minpoly);
            check(sqrt_in_field(cusp_mp, BigInt(-3)).status == SqrtStatus::PresentWitness,
                  "sqrt(-3) in cusp field");
            check(r.symmetry_group == "D4", "symmetry D4");
            check(fr.field.arithmetic, "arithmetic candidate");
        } else {
            why = "Lambda or factor shape wrong";
        }
        criterion(4, "figure-eight golden values", ok, why.empty() ? "all golden values met" : why);
    }

    {  // 5: the D3/D5 factor table, pinned by matrix order
        PolyF2 d3 = PolyF2::from_bits({1, 1});        // y+1
        PolyF2 d5 = PolyF2::from_bits({1, 1, 1});     // y^2+y+1
        bool ok = dihedral_image(d3).m == 3 && dihedral_image(d5).m == 5;
        long seen3 = 0, seen5 = 0;
        for (const auto& r : reports) {
            for (const auto& img : r.mod2_images) {
                if (img.m == 3) {
                    ++seen3;
                    ok = ok && img.factor_mod2 == d3;
                }
                if (img.m == 5) {
                    ++seen5;
                    ok = ok && img.factor_mod2 == d5;
                }
            }
        }
        criterion(5, "D3 <-> y+1 and D5 <-> y^2+y+1 under matrix-order ground truth", ok,
                  std::to_string(seen3) + " D3 and " + std::to_string(seen5) +
                      " D5 images across the census");
    }

    {  // 6: oracle equivalence + phi grouping
        long bad = 0;
        for (const auto& r : reports) {
            if (!r.oracle_match) ++bad;
            if (!r.spectrum_checked || !r.spectrum.phi_grouping) ++bad;
        }
        criterion(6, "Lambda mod 2 = oracle(p) and phi(m)/2 spectrum grouping", bad == 0,
                  std::to_string(reports.size()) + " knots");
    }

    {  // 7: longitude contract
        long factors = 0, bad = 0;
        for (const auto& r : reports) {
            if (r.contradiction) ++bad;
            for (const auto& fr : r.factors) {
                ++factors;
                if (!(fr.cusp.longitude_parabolic && fr.cusp.longitude_commutes &&
                      fr.cusp.g0_integral))
                    ++bad;
            }
        }
        criterion(7, "longitude parabolic, commutes with x1, g/2 integral", bad == 0,
                  std::to_string(factors) + " factors, " + std::to_string(bad) + " violations");
    }

    {  // 8: two_splitting consistency with the mod-2 factor degrees
        long bad = 0;
        for (const auto& r : reports) {
            for (const auto& fr : r.factors) {
                int sum = 0;
                for (int d : fr.field.two_split) sum += d;
                if (sum != fr.field.degree) ++bad;
                std::vector<int> degs;
                for (const auto& img : fr.mod2_images) degs.push_back(img.factor_mod2.degree());
                std::sort(degs.begin(), degs.end());
                if (degs != fr.field.two_split) ++bad;
            }
        }
        criterion(8, "2-splitting residue degrees = mod-2 factor degrees, summing to deg f",
                  bad == 0, "");
    }

    {  // 9: witness soundness on planted subfields
        Rng rng;
        const long squarefree[] = {-1, -2, -3, -5, -6, -7, -10, -11, 2, 3, 5, 6, 7, 10, 11, 13};
        long recovered = 0, total = 0, false_absent = 0;
        for (int it = 0; it < 500; ++it) {
            long n;
            PolyZ f;
            if (it % 5 == 4) {
                // quartic: gamma = sqrt(a) + sqrt(b), minpoly y^4 - 2(a+b)y^2 + (a-b)^2
                long a = squarefree[rng.range(0, 15)], b = a;
                while (b == a) b = squarefree[rng.range(0, 15)];
                n = a;
                f = PolyZ({(a - b) * (a - b), 0, -2 * (a + b), 0, 1});
            } else {
                // quadratic: gamma = sqrt(n) + r, minpoly y^2 - 2ry + (r^2 - n)
                n = squarefree[rng.range(0, 15)];
                long r = rng.range(-5, 5);
                f = PolyZ({r * r - n, -2 * r, 1});
            }
            ++total;
            SqrtResult res = sqrt_in_field(f, BigInt(n));
            if (res.status == SqrtStatus::PresentWitness) {
                PolyQ sq = poly_mod(res.witness * res.witness, to_polyq(f));
                if (sq == PolyQ::constant(BigRat(n))) ++recovered;
            } else if (res.status == SqrtStatus::CertifiedAbsent) {
                ++false_absent;
            }
        }
        criterion(9, "500 planted sqrt witnesses recovered and exactly verified",
                  recovered == total && false_absent == 0,
                  std::to_string(recovered) + "/" + std::to_string(total) + " recovered, " +
                      std::to_string(false_absent) + " false absences");
    }

    {  // 10: byte-identical census trees
        fs::path a = fs::temp_directory_path() / "tbk_acceptance_census_a";
        fs::path b = fs::temp_directory_path() / "tbk_acceptance_census_b";
        fs::remove_all(a);
        fs::remove_all(b);
        CensusOptions opt;
        opt.max_p = kMaxP;
        opt.jobs = 4;
        opt.out_dir = a.string();
        run_census(opt);
        opt.out_dir = b.string();
        run_census(opt);
        bool identical = true;
        long files = 0;
        for (const auto& e : fs::directory_iterator(a)) {
            ++files;
            fs::path other = b / e.path().filename();
            if (!fs::exists(other) || slurp(e.path()) != slurp(other)) identical = false;
        }
        for (const auto& e : fs::directory_iterator(b))
            if (!fs::exists(a / e.path().filename())) identical = false;
        criterion(10, "two full census runs produce byte-identical output trees", identical,
                  std::to_string(files) + " files compared");
        fs::remove_all(a);
        fs::remove_all(b);
    }

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures == 0 ? 0 : 1;
}
