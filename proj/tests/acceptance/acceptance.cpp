#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "../golden_suite.hpp"
#include "drinfeld/analytic_matrix.hpp"
#include "drinfeld/cheb_count.hpp"
#include "drinfeld/cm_orders.hpp"
#include "drinfeld/isogeny_hecke.hpp"

using namespace drinfeld;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

// Check counter; the first five mismatches are named in the report.
struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        ++bad;
        if (failures.size() < 5) failures.push_back(what);
    }
    Verdict verdict(const std::string& summary) const {
        std::string d = summary + ", " + std::to_string(checks) + " checks";
        for (const auto& f : failures) d += "; mismatch: " + f;
        if (bad > failures.size()) d += "; " + std::to_string(bad - failures.size()) + " more mismatches";
        return {bad == 0 && checks > 0, d};
    }
    std::size_t bad = 0;
};

PolyA pa(const FieldPtr& fq, const std::string& s) { return parse_poly(fq, s); }

std::vector<PolyA> monic_up_to(const FieldPtr& fq, int max_deg) {
    std::vector<PolyA> out{PolyA::one(fq)};
    for (int d = 1; d <= max_deg; ++d)
        for (std::uint64_t i = 0; i < checked_pow(fq->size(), d); ++i) out.push_back(monic_from_index(fq, i, d));
    return out;
}

const char* const curves[] = {"T^3-T-1", "T^3-T+1"};

// ---------------------------------------------------------------------------

Verdict psi_oracle() {
    Tally t;
    for (std::uint64_t q : {2, 3}) {
        auto fq = make_fq(q);
        for (int r : {2, 3})
            for (const auto& n : monic_up_to(fq, 3))
                t.expect(psi_r(IdealA(n), r) == count_cyclic_submodules(IdealA(n), r),
                         "q=" + std::to_string(q) + " r=" + std::to_string(r) + " n=" + to_string(n));
    }
    return t.verdict("monic n with deg <= 3, r in {2,3}, q in {2,3}");
}

struct IsoCase {
    std::uint64_t q;
    const char* field;
    std::vector<FiniteAField::Elem> g;
    const char* n;
};

const std::vector<IsoCase> iso_cases = {
    {3, "T^2+1", {1, 3}, "T"},       {2, "T^2+T+1", {1, 1, 2}, "T"}, {2, "T^2+T+1", {1, 3}, "T^2"},
    {3, "T^2+1", {1, 3}, "T^2"},     {3, "T^2+1", {1, 4}, "T^2+T+2"}, {3, "T+1", {1, 1}, "T"},
    {3, "T+1", {2, 1}, "T"},         {3, "T+1", {1, 2}, "T+2"},       {2, "T+1", {1, 1}, "T"},
    {2, "T+1", {1, 1}, "T^2"},       {2, "T+1", {1, 1}, "T^2+T+1"},   {2, "T^3+T+1", {1, 1}, "T"},
    {2, "T^3+T+1", {2, 1}, "T+1"},   {3, "T^2+1", {3, 1}, "T+1"},     {3, "T^2+1", {0, 1}, "T"},
    {3, "T+1", {1, 1, 1}, "T"},      {2, "T^2+T+1", {1, 1}, "T+1"},   {3, "T^2+1", {1, 1}, "T^2+T+1"},
    {5, "T+1", {1, 1}, "T"},         {4, "T+1", {1, 1}, "T"},
};

bool morphism_law(const Isogeny& iso) { return iso.u * iso.source.phi_T() == iso.target.phi_T() * iso.u; }

Verdict hecke_coherence(std::size_t& isogenies_checked, std::size_t& laws_failed) {
    Tally t;
    for (std::uint64_t q : {2, 3}) {
        auto fq = make_fq(q);
        for (int r : {2, 3})
            for (const auto& n : monic_up_to(fq, 3))
                t.expect(hecke_degree_index(r, IdealA(n)) == psi_r(IdealA(n), r),
                         "index q=" + std::to_string(q) + " r=" + std::to_string(r) + " n=" + to_string(n));
    }
    for (const auto& c : iso_cases) {
        auto fq = make_fq(c.q);
        auto L = FiniteAField::residue(fq, pa(fq, c.field));
        const ModuleL phi(L, c.g);
        const IdealA n(pa(fq, c.n));
        const auto isos = cyclic_isogenies(phi, n);
        t.expect(BigInt(isos.size()) == psi_r(n, phi.rank()),
                 std::string("isogenies over A/(") + c.field + ") n=" + c.n);
        for (const auto& iso : isos) {
            ++isogenies_checked;
            laws_failed += morphism_law(iso) ? 0 : 1;
        }
    }
    return t.verdict(std::to_string(iso_cases.size()) + " concrete modules");
}

// Crater setting: q=3, f = T^3 - T + 1, working field A/(P) with
// P = x^2 - f z^2 for x = T^2 + 2, z = T.
const char* const crater_field = "T^5+2*T^4+2*T^3+2";

struct GraphRun {
    std::string name;
    HeckeGraph graph;
};

std::vector<GraphRun> graph_runs() {
    std::vector<GraphRun> out;
    auto add = [&](std::uint64_t q, const char* P, const char* p) {
        auto fq = make_fq(q);
        out.push_back({std::string("q=") + std::to_string(q) + " A/(" + P + ") p=" + p,
                       isogeny_graph(FiniteAField::residue(fq, pa(fq, P)), IdealA(pa(fq, p)))});
    };
    add(3, "T+1", "T");
    add(3, "T^2+1", "T");
    add(2, "T^3+T+1", "T");
    add(2, "T^2+T+1", "T+1");
    add(3, crater_field, "T");
    return out;
}

Verdict isogeny_identity(const std::vector<GraphRun>& runs, std::size_t from_c2, std::size_t failed_c2) {
    Tally t;
    std::size_t total = from_c2;
    t.checks += from_c2;
    t.bad += failed_c2;
    if (failed_c2) t.failures.push_back(std::to_string(failed_c2) + " isogenies from the Hecke coherence run");
    for (const auto& run : runs)
        for (std::size_t v = 0; v < run.graph.vertices.size(); ++v) {
            const ModuleL phi = module_with_j(run.graph.field, run.graph.vertices[v]);
            for (const auto& iso : cyclic_isogenies(phi, IdealA(run.graph.prime))) {
                ++total;
                t.expect(morphism_law(iso), run.name + " vertex " + run.graph.labels[v]);
            }
        }
    return t.verdict(std::to_string(runs.size()) + " graph runs, " + std::to_string(total) + " isogenies");
}

Verdict min_poly_identity() {
    Tally t;
    std::mt19937_64 rng(0x5eed0003);
    for (std::uint64_t q : {2, 3}) {
        auto fq = make_fq(q);
        for (int k : {2, 3}) {
            const PolyA g = pow(PolyA::x(fq), static_cast<std::uint64_t>(k));
            const auto carlitz = carlitz_over_extension(SimpleExtensionField::over_polynomial(fq, g));
            std::vector<PolyA> samples{PolyA::x(fq), PolyA::x(fq) + PolyA::one(fq)};
            while (samples.size() < 22) {
                std::vector<GaloisField::Elem> c(1 + rng() % 4);
                for (auto& x : c) x = rng() % q;
                PolyA a(fq, c);
                if (!a.is_zero()) samples.push_back(a);
            }
            for (const auto& a : samples)
                t.expect(verify_min_poly_identity(carlitz, g, a),
                         "q=" + std::to_string(q) + " T->y^" + std::to_string(k) + " a=" + to_string(a, "y"));
        }
    }
    return t.verdict("Carlitz restrictions T -> y^k, k in {2,3}, q in {2,3}, 20 random a each");
}

Verdict class_numbers() {
    Tally t;
    auto fq = make_fq(3);
    const BigInt expected[] = {1, 7};
    std::string summary;
    for (int i = 0; i < 2; ++i) {
        const auto e = make_imaginary_quadratic(pa(fq, curves[i]));
        const BigInt h = class_number(e);
        const BigInt divisors = pic_group(e).order();
        const BigInt ideals = pic_order_bruteforce(make_order(e, PolyA::one(fq)));
        const BigRat lb = class_number_lower_bound(3, e.genus());
        t.expect(h == expected[i], std::string(curves[i]) + " h=" + to_string(h));
        t.expect(divisors == h, std::string(curves[i]) + " reduced divisors " + to_string(divisors));
        t.expect(ideals == h, std::string(curves[i]) + " ideal classes " + to_string(ideals));
        t.expect(BigRat(h) >= lb && lb == BigRat(1, 2), std::string(curves[i]) + " lower bound " + to_string(lb));
        summary += (i ? ", " : "") + std::string("h(") + curves[i] + ") = " + to_string(h);
    }
    return t.verdict(summary + ", lower bound 1/2");
}

Verdict exact_sequence() {
    Tally t;
    auto fq = make_fq(3);
    std::string values;
    for (const char* f : curves) {
        const auto e = make_imaginary_quadratic(pa(fq, f));
        for (const auto& c : monic_up_to(fq, 1)) {
            const OrderR R = make_order(e, c);
            const BigInt formula = pic_order_of_order(R);
            const BigInt brute = pic_order_bruteforce(R);
            t.expect(formula == brute, std::string(f) + " c=" + to_string(c) + ": " + to_string(formula) +
                                           " vs " + to_string(brute));
            values += (values.empty() ? "" : " ") + to_string(formula);
        }
    }
    return t.verdict("orders with deg c <= 1 on both curves, |Pic(R)| = " + values);
}

Verdict sigma_generators() {
    Tally t;
    auto fq = make_fq(3);
    std::mt19937_64 rng(0x5eed0007);
    auto rand_poly = [&](int d) {
        while (true) {
            std::vector<GaloisField::Elem> c(static_cast<std::size_t>(d) + 1);
            for (auto& x : c) x = rng() % 3;
            PolyA p(fq, c);
            if (!p.is_zero()) return p;
        }
    };
    auto rand_N = [&] {
        while (true) {
            PolyA p = rand_poly(2);
            if (p.degree() >= 1) return p;
        }
    };
    for (int r = 2; r <= 4; ++r) {
        for (int i = 1; i < r; ++i)
            for (long long n = -2; n <= 3; ++n) {
                const PolyA a = rand_poly(2), b = rand_poly(2), N = rand_N();
                const RatFunc ca = RatFunc(a).pow(i) * RatFunc(N).pow(-n);
                const RatFunc cb = RatFunc(b).pow(i) * RatFunc(N).pow(-n);
                const auto R = static_cast<std::size_t>(r), I = static_cast<std::size_t>(i);
                const MatK s = sigma_generator(i, n, a, N, r);
                const std::string tag = "r=" + std::to_string(r) + " i=" + std::to_string(i) + " n=" + std::to_string(n);
                t.expect(s == MatK::elementary(fq, R, I, R, ca), tag);
                t.expect(s * sigma_generator(i, n, b, N, r) == MatK::elementary(fq, R, I, R, ca + cb), tag + " sum");
            }
        for (int k = 0; k < 100; ++k) {
            const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(r - 1));
            const long long n = static_cast<long long>(rng() % 7) - 3;
            AffinePoint w;
            for (int j = 0; j + 1 < r; ++j) w.push_back(RatFunc(rand_poly(3), rand_poly(1).monic()));
            t.expect(verify_translation(i, n, rand_poly(2), rand_N(), r, w),
                     "translation r=" + std::to_string(r) + " sample " + std::to_string(k));
        }
    }
    return t.verdict("matrix identities and 100 translations per r in {2,3,4}");
}

Verdict chebotarev() {
    Tally t;
    auto fq = make_fq(3);
    for (const char* f : curves) {
        const PolyA fp = pa(fq, f);
        for (int s = 1; s <= 8; ++s) {
            const SplittingCounts c = splitting_counts(s, fp);
            t.expect(c.split + c.inert + c.ramified == c.total && BigInt(c.total) == necklace_count(3, s),
                     std::string(f) + " classification t=" + std::to_string(s));
            const ChebBound b = cheb_bound_check(s, fp);
            t.expect(b.holds && b.count == c.split, std::string(f) + " bound t=" + std::to_string(s));
        }
    }
    return t.verdict("t <= 8 on both curves");
}

Verdict crater(std::optional<HeckeGraph> graph) {
    Tally t;
    auto fq = make_fq(3);
    const PolyA f = pa(fq, "T^3-T+1"), p = pa(fq, "T");
    const auto e = make_imaginary_quadratic(f);
    // class-group side first
    t.expect(is_residual(p, e), "p = T is residual");
    const PicGroup G = pic_group(e);
    const std::size_t expected = pic_action(prime_class(e, p), G).order;
    t.expect(pic_action(prime_class(e, p, true), G).order == expected, "conjugate prime order");
    const PolyA x = pa(fq, "T^2+2"), z = pa(fq, "T");
    t.expect((x * x - f * z * z).monic() == pa(fq, crater_field), "working prime is x^2 - f z^2");
    if (!graph) graph = isogeny_graph(FiniteAField::residue(fq, pa(fq, crater_field)), IdealA(p));
    const auto cycles = component_sizes(*graph, maximal_cm_vertices(*graph, f));
    t.expect(!cycles.empty(), "crater is nonempty");
    std::string list;
    for (auto c : cycles) {
        t.expect(c == expected, "cycle of length " + std::to_string(c));
        list += (list.empty() ? "" : ",") + std::to_string(c);
    }
    return t.verdict("ord([P]) = " + std::to_string(expected) + ", crater cycles [" + list + "] over A/(" +
                     crater_field + ")");
}

Verdict determinism() {
    const auto r = golden::run_suite(DRINFELD_FORGE_BINARY, GOLDEN_DIR, false);
    std::string d = std::to_string(r.cases) + " CLI cases run twice";
    for (const auto& n : r.rerun_mismatch) d += "; rerun differs: " + n;
    for (const auto& n : r.golden_mismatch) d += "; golden differs: " + n;
    return {r.ok(), d};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int id, const std::string& name, double limit_s, const std::function<Verdict()>& body) {
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = body();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = limit_s <= 0 || s < limit_s;
        const bool ok = v.pass && in_time;
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line << std::fixed << std::setprecision(2);
        line << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << v.detail << " (" << s << " s";
        if (limit_s > 0) line << ", limit " << limit_s << " s";
        line << ")";
        if (!in_time) line << " over time limit";
        std::cout << line.str() << std::endl;
    };

    std::size_t isogenies = 0, law_failures = 0;
    std::vector<GraphRun> runs;
    report(1, "psi formula equals cyclic submodule count", 60, psi_oracle);
    report(2, "Hecke degree coherence", 120, [&] { return hecke_coherence(isogenies, law_failures); });
    report(3, "isogeny morphism law", 0, [&] {
        runs = graph_runs();
        return isogeny_identity(runs, isogenies, law_failures);
    });
    report(4, "minimal polynomial identity", 0, min_poly_identity);
    report(5, "class numbers", 0, class_numbers);
    report(6, "Pic(R) exact sequence against ideal classes", 0, exact_sequence);
    report(7, "sigma generators", 10, sigma_generators);
    report(8, "Chebotarev bound", 60, chebotarev);
    report(9, "crater cycles equal ord([P])", 0, [&] {
        std::optional<HeckeGraph> g;
        if (!runs.empty()) g = runs.back().graph;
        return crater(g);
    });
    report(10, "CLI determinism", 0, determinism);
    std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
