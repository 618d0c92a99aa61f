#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "drinfeld/analytic_matrix.hpp"
#include "drinfeld/cheb_count.hpp"
#include "drinfeld/cm_orders.hpp"
#include "drinfeld/isogeny_hecke.hpp"
#include "drinfeld/literal_text.hpp"
#include "drinfeld/module_literal.hpp"

namespace drinfeld::cli {

namespace {

using json = nlohmann::ordered_json;

struct Output {
    json payload = json::object();
    std::string text;
};

using Handler = std::function<Output()>;
using Handlers = std::map<const CLI::App*, Handler>;

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

template <class T, class F>
std::vector<std::string> map_str(const std::vector<T>& v, F f) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(f(x));
    return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

PolyA poly_arg(const FieldPtr& fq, const std::string& s) { return parse_poly(fq, s); }

IdealA ideal_arg(const FieldPtr& fq, const std::string& s) {
    const PolyA n = poly_arg(fq, s);
    if (n.is_zero()) throw std::domain_error("the ideal must be nonzero");
    return IdealA(n);
}

ModuleL finite_module_arg(const std::string& text) {
    ModuleLiteral m = parse_module(text);
    if (!m.is_finite()) throw std::domain_error("this command needs a module over a finite A-field L = A/(P)");
    return std::get<ModuleL>(m.module);
}

std::vector<BigInt> bigint_list(const std::string& text) {
    std::vector<BigInt> out;
    for (const auto& s : split(text, ',')) {
        const BigRat v = parse_rational(s);
        if (denominator(v) != 1) throw std::invalid_argument("expected an integer, got \"" + s + "\"");
        out.push_back(numerator(v));
    }
    return out;
}

// ---------------------------------------------------------------- skew / modules

void add_skew_mul(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        std::string L = "generic", u, v;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("skew-mul", "Product u*v in L{tau}");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--L", o->L, "coefficient field: generic or A/(P)")->capture_default_str();
    sc->add_option("--u", o->u, "left factor")->required();
    sc->add_option("--v", o->v, "right factor")->required();
    h[sc] = [o] {
        const FieldPtr fq = make_fq(o->q);
        std::string product;
        if (o->L == "generic") {
            auto K = RationalFunctionField::make(fq);
            product = to_string(parse_twisted(K, o->u) * parse_twisted(K, o->v));
        } else {
            auto L = parse_residue_field(fq, o->L);
            product = to_string(parse_twisted(L, o->u) * parse_twisted(L, o->v));
        }
        Output out;
        out.payload["product"] = product;
        out.text = product + "\n";
        return out;
    };
}

void add_phi_a(CLI::App& app, Handlers& h) {
    struct O {
        std::string module, a;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("phi-a", "phi_a for a module literal and a in A");
    sc->add_option("--module", o->module, "module literal")->required();
    sc->add_option("--a", o->a, "element of A")->required();
    h[sc] = [o] {
        const ModuleLiteral m = parse_module(o->module);
        const PolyA a = poly_arg(m.fq, o->a);
        const std::string phi = std::visit([&](const auto& mod) { return to_string(mod.phi_a(a)); }, m.module);
        Output out;
        out.payload["a"] = to_string(a);
        out.payload["phi_a"] = phi;
        out.text = phi + "\n";
        return out;
    };
}

void add_torsion(CLI::App& app, Handlers& h) {
    struct O {
        std::string module, n;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("torsion", "Generators of phi[n] over its field of definition");
    sc->add_option("--module", o->module, "module literal over A/(P)")->required();
    sc->add_option("--n", o->n, "ideal n, coprime to P")->required();
    h[sc] = [o] {
        const ModuleL phi = finite_module_arg(o->module);
        const IdealA n = ideal_arg(phi.ctx().fq(), o->n);
        const TorsionBasis tb = torsion_basis(phi, n.generator());
        const FiniteAField& Ld = *tb.extension.field;
        const auto gens = map_str(tb.generators, [&](auto x) { return Ld.to_string(x); });
        const BigInt size = big_pow(ideal_norm(n), static_cast<std::uint64_t>(phi.rank()));
        Output out;
        out.payload["n"] = to_string(n.generator());
        out.payload["extension_degree"] = tb.degree;
        out.payload["generators"] = gens;
        out.payload["fq_dimension"] = tb.fq_basis.size();
        out.payload["order"] = to_string(size);
        out.text = "n = " + to_string(n.generator()) + "\nextension degree = " + std::to_string(tb.degree) +
                   "\ngenerators = [" + join(gens) + "]\nF_q-dimension = " + std::to_string(tb.fq_basis.size()) +
                   "\n|phi[n]| = " + to_string(size) + "\n";
        return out;
    };
}

// ---------------------------------------------------------------- isogenies / Hecke

void add_isogenies(CLI::App& app, Handlers& h) {
    struct O {
        std::string module, n;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("isogenies", "All cyclic n-isogenies out of a module over A/(P)");
    sc->add_option("--module", o->module, "module literal over A/(P)")->required();
    sc->add_option("--n", o->n, "ideal n, coprime to P")->required();
    h[sc] = [o] {
        const ModuleL phi = finite_module_arg(o->module);
        const IdealA n = ideal_arg(phi.ctx().fq(), o->n);
        const auto isos = cyclic_isogenies(phi, n);
        Output out;
        out.payload["n"] = to_string(n.generator());
        out.payload["psi"] = to_string(psi_r(n, phi.rank()));
        out.payload["count"] = isos.size();
        out.payload["isogenies"] = json::array();
        std::ostringstream text;
        text << "psi = " << to_string(psi_r(n, phi.rank())) << "\nisogenies = " << isos.size() << "\n";
        std::size_t k = 0;
        for (const auto& iso : isos) {
            const bool law = iso.u * iso.source.phi_T() == iso.target.phi_T() * iso.u;
            json item;
            item["kernel"] = to_string(iso.kernel);
            item["u"] = to_string(iso.u);
            item["target_phiT"] = to_string(iso.target.phi_T());
            item["morphism_law"] = law;
            out.payload["isogenies"].push_back(item);
            text << "[" << ++k << "] kernel " << to_string(iso.kernel) << "; u = " << to_string(iso.u)
                 << "; target phiT = " << to_string(iso.target.phi_T()) << "; law " << (law ? "ok" : "FAILED")
                 << "\n";
        }
        out.text = text.str();
        return out;
    };
}

void add_hecke_image(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        std::string L, j, p;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("hecke-image", "j-invariants of the targets of cyclic p-isogenies from j");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--L", o->L, "finite A-field A/(P)")->required();
    sc->add_option("--j", o->j, "j-invariant in L (polynomial in t)")->required();
    sc->add_option("--p", o->p, "prime of A coprime to P")->required();
    h[sc] = [o] {
        const FieldPtr fq = make_fq(o->q);
        const auto L = parse_residue_field(fq, o->L);
        const IdealA p = ideal_arg(fq, o->p);
        const HeckeImage img = hecke_image_j(L, L->parse(o->j), p);
        const FiniteAField& E = *img.extension.field;
        const auto values = map_str(img.values, [&](auto x) { return E.to_string(x); });
        Output out;
        out.payload["extension_degree"] = E.degree_over_fq() / L->degree_over_fq();
        out.payload["count"] = values.size();
        out.payload["values"] = values;
        out.text = "extension degree = " + std::to_string(E.degree_over_fq() / L->degree_over_fq()) +
                   "\ncount = " + std::to_string(values.size()) + "\nvalues = [" + join(values) + "]\n";
        return out;
    };
}

void add_hecke_degree(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        int r = 0;
        std::string n;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("hecke-degree", "Index [GL_r(A/n) : K_0(n)] by orbit enumeration");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--r", o->r, "rank")->required();
    sc->add_option("--n", o->n, "ideal n")->required();
    h[sc] = [o] {
        const IdealA n = ideal_arg(make_fq(o->q), o->n);
        const BigInt idx = hecke_degree_index(o->r, n);
        Output out;
        out.payload["index"] = to_string(idx);
        out.payload["psi"] = to_string(psi_r(n, o->r));
        out.text = to_string(idx) + "\n";
        return out;
    };
}

void add_psi(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        int r = 0;
        std::string n;
        bool oracle = false;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("psi", "psi_r(n), the number of cyclic submodules A/n of (A/n)^r");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--r", o->r, "rank")->required();
    sc->add_option("--n", o->n, "ideal n")->required();
    sc->add_flag("--oracle", o->oracle, "also count submodules by enumeration");
    h[sc] = [o] {
        const IdealA n = ideal_arg(make_fq(o->q), o->n);
        const BigInt v = psi_r(n, o->r);
        Output out;
        out.payload["psi"] = to_string(v);
        out.text = to_string(v) + "\n";
        if (o->oracle) {
            const BigInt c = count_cyclic_submodules(n, o->r);
            out.payload["enumerated"] = to_string(c);
            out.text += "enumerated = " + to_string(c) + "\n";
        }
        return out;
    };
}

void add_snf(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        std::string matrix;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("snf", "Smith normal form over A");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--matrix", o->matrix, "rows separated by ';', entries by ','")->required();
    h[sc] = [o] {
        const MatA m = parse_mat_a(make_fq(o->q), o->matrix);
        const SmithForm s = smith_normal_form(m);
        const auto factors = map_str(s.factors, [](const PolyA& p) { return to_string(p); });
        Output out;
        out.payload["factors"] = factors;
        out.payload["U"] = to_string(s.left);
        out.payload["V"] = to_string(s.right);
        out.text = "factors = [" + join(factors) + "]\nU = " + to_string(s.left) + "\nV = " + to_string(s.right) + "\n";
        return out;
    };
}

// ---------------------------------------------------------------- CM orders

struct ExtOpts {
    std::uint64_t q = 0;
    std::string f;
};

void add_ext_options(CLI::App* sc, ExtOpts& e) {
    sc->add_option("--q", e.q, "size of F_q (odd)")->required();
    sc->add_option("--f", e.f, "squarefree f of odd degree, K' = K(sqrt f)")->required();
}

ImaginaryQuadExt ext_of(const ExtOpts& e) { return make_imaginary_quadratic(poly_arg(make_fq(e.q), e.f)); }

void add_class_number(CLI::App& app, Handlers& h) {
    auto o = std::make_shared<ExtOpts>();
    auto* sc = app.add_subcommand("class-number", "h(A') for y^2 = f");
    add_ext_options(sc, *o);
    h[sc] = [o] {
        const auto e = ext_of(*o);
        const BigInt hn = class_number(e);
        const BigRat lb = class_number_lower_bound(e.fq->size(), e.genus());
        Output out;
        out.payload["h"] = to_string(hn);
        out.payload["genus"] = e.genus();
        out.payload["lower_bound"] = to_string(lb);
        out.payload["bound_holds"] = BigRat(hn) >= lb;
        out.text = "h = " + to_string(hn) + "\ngenus = " + std::to_string(e.genus()) + "\nlower bound = " +
                   to_string(lb) + "\nbound holds = " + yes_no(BigRat(hn) >= lb) + "\n";
        return out;
    };
}

void add_pic(CLI::App& app, Handlers& h) {
    auto o = std::make_shared<ExtOpts>();
    auto* sc = app.add_subcommand("pic", "Pic(A') as reduced Mumford divisors");
    add_ext_options(sc, *o);
    h[sc] = [o] {
        const auto e = ext_of(*o);
        const PicGroup g = pic_group(e);
        const auto elems = map_str(g.elements, [](const MumfordDivisor& d) { return to_string(d); });
        std::size_t exponent = 1;
        for (const auto& x : g.elements) exponent = std::lcm(exponent, pic_action(x, g).order);
        Output out;
        out.payload["order"] = g.order();
        out.payload["exponent"] = exponent;
        out.payload["cyclic"] = exponent == g.order();
        out.payload["elements"] = elems;
        out.text = "order = " + std::to_string(g.order()) + "\nexponent = " + std::to_string(exponent) +
                   "\ncyclic = " + yes_no(exponent == g.order()) + "\n";
        for (const auto& s : elems) out.text += s + "\n";
        return out;
    };
}

struct OrderOpts : ExtOpts {
    std::string c = "1";
};

void add_order_options(CLI::App* sc, OrderOpts& o) {
    add_ext_options(sc, o);
    sc->add_option("--c", o.c, "conductor c of R = A + cA'")->capture_default_str();
}

OrderR order_of(const OrderOpts& o) { return make_order(ext_of(o), poly_arg(make_fq(o.q), o.c)); }

void add_pic_order(CLI::App& app, Handlers& h) {
    struct O : OrderOpts {
        bool brute = false;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("pic-order", "|Pic(R)| for R = A + cA'");
    add_order_options(sc, *o);
    sc->add_flag("--bruteforce", o->brute, "also count ideal classes directly");
    h[sc] = [o] {
        const OrderR R = order_of(*o);
        const BigInt v = pic_order_of_order(R);
        const ConductorIndex ci = conductor_index_identity(R);
        Output out;
        out.payload["pic_order"] = to_string(v);
        out.payload["maximal_mod_order"] = to_string(ci.maximal_mod_order);
        out.payload["index_identity"] = ci.identity;
        out.text = "|Pic(R)| = " + to_string(v) + "\n|A'/R| = " + to_string(ci.maximal_mod_order) +
                   "\nindex identity = " + yes_no(ci.identity) + "\n";
        if (o->brute) {
            const BigInt b = pic_order_bruteforce(R);
            out.payload["bruteforce"] = to_string(b);
            out.text += "bruteforce = " + to_string(b) + "\n";
        }
        return out;
    };
}

void add_cm_height(CLI::App& app, Handlers& h) {
    struct O : OrderOpts {
        int r = 0;
        std::optional<std::string> eps, c_eps;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("cm-height", "H^r = q^(r g') |c| and the Pic lower bound");
    add_order_options(sc, *o);
    sc->add_option("--r", o->r, "rank")->required();
    sc->add_option("--eps", o->eps, "epsilon for |Pic(R)| > C H^(1-eps)");
    sc->add_option("--C", o->c_eps, "constant C_eps (default 1)");
    h[sc] = [o] {
        const OrderR R = order_of(*o);
        const CmHeight H = cm_height(R, o->r);
        Output out;
        out.payload["H_power"] = to_string(H.power);
        out.payload["r"] = H.r;
        out.text = "H^r = " + to_string(H.power) + ", r = " + std::to_string(H.r) + "\n";
        if (o->eps) {
            const BigRat c = o->c_eps ? parse_rational(*o->c_eps) : BigRat(1);
            const bool ok = pic_lower_bound_check(R, o->r, parse_rational(*o->eps), c);
            out.payload["lower_bound_holds"] = ok;
            out.text += "lower bound holds = " + yes_no(ok) + "\n";
        }
        return out;
    };
}

void add_residual(CLI::App& app, Handlers& h) {
    struct O : OrderOpts {
        std::string p;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("residual", "Whether p splits in R and is prime to the conductor");
    add_order_options(sc, *o);
    sc->add_option("--p", o->p, "prime of A")->required();
    h[sc] = [o] {
        const OrderR R = order_of(*o);
        const bool v = is_residual(poly_arg(R.ext.fq, o->p), R);
        Output out;
        out.payload["residual"] = v;
        out.text = yes_no(v) + "\n";
        return out;
    };
}

void add_pic_action(CLI::App& app, Handlers& h) {
    struct O : ExtOpts {
        std::string p;
        bool conjugate = false;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("pic-action", "Permutation of Pic(A') by the class of a prime above p");
    add_ext_options(sc, *o);
    sc->add_option("--p", o->p, "residual or ramified prime of A")->required();
    sc->add_flag("--conjugate", o->conjugate, "use the conjugate prime");
    h[sc] = [o] {
        const auto e = ext_of(*o);
        const MumfordDivisor P = prime_class(e, poly_arg(e.fq, o->p), o->conjugate);
        const PicGroup g = pic_group(e);
        const PicAction act = pic_action(P, g);
        std::vector<std::size_t> perm = act.permutation;
        Output out;
        out.payload["prime_class"] = to_string(P);
        out.payload["permutation"] = perm;
        out.payload["order"] = act.order;
        out.text = "prime class = " + to_string(P) + "\npermutation = [" +
                   join(map_str(perm, [](std::size_t i) { return std::to_string(i); })) +
                   "]\norder = " + std::to_string(act.order) + "\n";
        return out;
    };
}

// ---------------------------------------------------------------- graphs

void add_volcano(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        std::string L, p;
        unsigned tower = 1;
        std::optional<std::string> cm_f;
        bool dump = false;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("volcano", "Rank-2 p-isogeny graph on the j-invariants of A/(P)");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--L", o->L, "finite A-field A/(P)")->required();
    sc->add_option("--p", o->p, "prime of A coprime to P")->required();
    sc->add_option("--tower", o->tower, "degree of the working extension of L")->capture_default_str();
    sc->add_option("--cm-f", o->cm_f, "also report cycles among modules with End the maximal order of K(sqrt f)");
    sc->add_flag("--dump", o->dump, "print every vertex and edge");
    h[sc] = [o] {
        const FieldPtr fq = make_fq(o->q);
        const auto L = parse_residue_field(fq, o->L);
        const HeckeGraph g = isogeny_graph(L, ideal_arg(fq, o->p), o->tower);
        const auto deg = g.out_degree();
        Output out;
        std::ostringstream text;
        out.payload["vertices"] = g.vertices.size();
        out.payload["edges"] = g.edges.size();
        out.payload["out_degree"] = deg ? json(*deg) : json(nullptr);
        out.payload["stubs"] = g.stub_count();
        text << "vertices = " << g.vertices.size() << "\nedges = " << g.edges.size()
             << "\nout-degree = " << (deg ? std::to_string(*deg) : "irregular") << "\nstubs = " << g.stub_count()
             << "\n";
        auto sizes_str = [](const std::vector<std::size_t>& v) {
            return join(map_str(v, [](std::size_t x) { return std::to_string(x); }));
        };
        if (fq->characteristic() != 2) {
            const auto cycles = crater_cycles(g);
            out.payload["crater_components"] = cycles;
            text << "crater components = [" << sizes_str(cycles) << "]\n";
        }
        if (o->cm_f) {
            const auto sizes = component_sizes(g, maximal_cm_vertices(g, poly_arg(fq, *o->cm_f)));
            out.payload["maximal_cm_components"] = sizes;
            text << "maximal CM components = [" << sizes_str(sizes) << "]\n";
        }
        if (o->dump) {
            const std::string d = dump(g);
            out.payload["dump"] = split(d.substr(0, d.empty() ? 0 : d.size() - 1), '\n');
            text << d;
        }
        out.text = text.str();
        return out;
    };
}

void add_degree_bound(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        int r = 0;
        std::string n, deg_m, w;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("degree-bound", "Deg(M)^2 prod_i |n|^(r-1) psi_r(n)^2 w_i");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--r", o->r, "rank")->required();
    sc->add_option("--n", o->n, "ideal n")->required();
    sc->add_option("--deg-m", o->deg_m, "Deg(M)")->required();
    sc->add_option("--w", o->w, "weights w(J_i), comma separated")->required();
    h[sc] = [o] {
        const IdealA n = ideal_arg(make_fq(o->q), o->n);
        const auto dm = bigint_list(o->deg_m);
        if (dm.size() != 1) throw std::invalid_argument("--deg-m takes one integer");
        const BigInt v = degree_bound(n, o->r, dm.front(), bigint_list(o->w));
        Output out;
        out.payload["bound"] = to_string(v);
        out.text = to_string(v) + "\n";
        return out;
    };
}

// ---------------------------------------------------------------- matrices

void add_sigma_verify(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        int r = 0, i = 0;
        long long n = 0;
        std::string a, N;
        std::optional<std::string> omega;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("sigma-verify", "sigma_i^n(a) = I + a^i N^(-n) delta_ir and its translation");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--r", o->r, "size of the matrices")->required();
    sc->add_option("--i", o->i, "index 1 <= i <= r-1")->required();
    sc->add_option("--n", o->n, "exponent n (any integer)")->required();
    sc->add_option("--a", o->a, "nonzero a in A")->required();
    sc->add_option("--N", o->N, "nonconstant N in A")->required();
    sc->add_option("--omega", o->omega, "point of the chart, r-1 entries separated by ',' (default origin)");
    h[sc] = [o] {
        const FieldPtr fq = make_fq(o->q);
        const PolyA a = poly_arg(fq, o->a), N = poly_arg(fq, o->N);
        const MatK s = sigma_generator(o->i, o->n, a, N, o->r);
        const RatFunc c = RatFunc(a).pow(o->i) * RatFunc(N).pow(-o->n);
        const bool identity = s == MatK::elementary(fq, static_cast<std::size_t>(o->r), static_cast<std::size_t>(o->i),
                                                    static_cast<std::size_t>(o->r), c);
        AffinePoint w(static_cast<std::size_t>(o->r - 1), RatFunc::zero(fq));
        if (o->omega) {
            w.clear();
            for (const auto& x : split(*o->omega, ',')) w.push_back(parse_ratfunc(fq, x));
            if (w.size() != static_cast<std::size_t>(o->r - 1))
                throw std::invalid_argument("--omega needs r-1 entries");
        }
        const AffinePoint img = mobius_action(s, w);
        const bool translation = verify_translation(o->i, o->n, a, N, o->r, w);
        Output out;
        out.payload["sigma"] = to_string(s);
        out.payload["coefficient"] = to_string(c);
        out.payload["matrix_identity"] = identity;
        out.payload["omega"] = to_string(w);
        out.payload["image"] = to_string(img);
        out.payload["translation"] = translation;
        out.text = "sigma = " + to_string(s) + "\ncoefficient = " + to_string(c) + "\nmatrix identity = " +
                   yes_no(identity) + "\nimage of " + to_string(w) + " = " + to_string(img) + "\ntranslation = " +
                   yes_no(translation) + "\n";
        return out;
    };
}

// ---------------------------------------------------------------- Chebotarev

void add_cheb_count(CLI::App& app, Handlers& h) {
    struct O : ExtOpts {
        int t = 0;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("cheb-count", "Splitting of degree-t primes in K(sqrt f)");
    sc->add_option("--q", o->q, "size of F_q (odd)")->required();
    sc->add_option("--f", o->f, "squarefree f")->required();
    sc->add_option("--t", o->t, "prime degree")->required();
    h[sc] = [o] {
        const auto s = splitting_counts(o->t, poly_arg(make_fq(o->q), o->f));
        Output out;
        out.payload["t"] = s.t;
        out.payload["split"] = s.split;
        out.payload["inert"] = s.inert;
        out.payload["ramified"] = s.ramified;
        out.payload["total"] = s.total;
        out.text = "pi_M(" + std::to_string(s.t) + ") = " + std::to_string(s.split) + "\ninert = " +
                   std::to_string(s.inert) + "\nramified = " + std::to_string(s.ramified) + "\ntotal = " +
                   std::to_string(s.total) + "\n";
        return out;
    };
}

void add_cheb_check(CLI::App& app, Handlers& h) {
    struct O : ExtOpts {
        int t_max = 8;
        std::optional<int> genus;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("cheb-check", "|pi_M(t) - q^t/(2t)| < 4(g_M+2) q^(t/2) for t = 1..t-max");
    sc->add_option("--q", o->q, "size of F_q (odd)")->required();
    sc->add_option("--f", o->f, "squarefree f")->required();
    sc->add_option("--t-max", o->t_max, "largest degree")->capture_default_str();
    sc->add_option("--genus", o->genus, "override for g_M");
    h[sc] = [o] {
        const PolyA f = poly_arg(make_fq(o->q), o->f);
        Output out;
        out.payload["rows"] = json::array();
        std::ostringstream text;
        text << "t\tpi_M(t)\tmain term\trhs^2\tverdict\n";
        bool all = true;
        for (int t = 1; t <= o->t_max; ++t) {
            const ChebBound b = cheb_bound_check(t, f, o->genus);
            all = all && b.holds;
            json row;
            row["t"] = t;
            row["pi_M"] = b.count;
            row["main_term"] = to_string(b.main_term);
            row["lhs_squared"] = to_string(b.lhs_squared);
            row["rhs_squared"] = to_string(b.rhs_squared);
            row["holds"] = b.holds;
            out.payload["rows"].push_back(row);
            text << t << "\t" << b.count << "\t" << to_string(b.main_term) << "\t" << to_string(b.rhs_squared) << "\t"
                 << (b.holds ? "holds" : "fails") << "\n";
        }
        out.payload["all_hold"] = all;
        text << "all hold = " << yes_no(all) << "\n";
        out.text = text.str();
        return out;
    };
}

void add_effective_t(CLI::App& app, Handlers& h) {
    struct O {
        std::uint64_t q = 0;
        std::string c1 = "1", c2 = "1", c3 = "1", c_eps = "1", eps = "1/2", log_c = "0", log_m = "0", c_bez = "1",
                    deg_x = "1", n_exp = "1", f_deg = "1";
        int genus = 1, rank = 2, n_c = 1, bound = 0;
    };
    auto o = std::make_shared<O>();
    auto* sc = app.add_subcommand("effective-t", "Least t in n_c N solving both effective inequalities");
    sc->add_option("--q", o->q, "size of F_q")->required();
    sc->add_option("--bound", o->bound, "largest t to try")->required();
    sc->add_option("--genus", o->genus, "g'")->capture_default_str();
    sc->add_option("--r", o->rank, "r in |c|^(1/r)")->capture_default_str();
    sc->add_option("--n-c", o->n_c, "step n_c")->capture_default_str();
    sc->add_option("--C1", o->c1, "C_1")->capture_default_str();
    sc->add_option("--C2", o->c2, "C_2")->capture_default_str();
    sc->add_option("--C3", o->c3, "C_3")->capture_default_str();
    sc->add_option("--C-eps", o->c_eps, "C_eps")->capture_default_str();
    sc->add_option("--eps", o->eps, "epsilon in (0, 1)")->capture_default_str();
    sc->add_option("--log-c", o->log_c, "log_q |c|")->capture_default_str();
    sc->add_option("--log-m", o->log_m, "log_q |m_X|")->capture_default_str();
    sc->add_option("--c", o->c_bez, "constant c")->capture_default_str();
    sc->add_option("--deg-x", o->deg_x, "deg_T(X)")->capture_default_str();
    sc->add_option("--n", o->n_exp, "exponent n")->capture_default_str();
    sc->add_option("--F-deg", o->f_deg, "[F:K]")->capture_default_str();
    h[sc] = [o] {
        ChebParams p;
        p.q = o->q;
        p.c1 = parse_rational(o->c1);
        p.c2 = parse_rational(o->c2);
        p.c3 = parse_rational(o->c3);
        p.c_eps = parse_rational(o->c_eps);
        p.eps = parse_rational(o->eps);
        p.genus = o->genus;
        p.rank = o->rank;
        p.log_c = parse_rational(o->log_c);
        p.log_m = parse_rational(o->log_m);
        p.c_bez = parse_rational(o->c_bez);
        p.deg_t_x = parse_rational(o->deg_x);
        p.n_exp = parse_rational(o->n_exp);
        p.f_deg = parse_rational(o->f_deg);
        p.n_c = o->n_c;
        const auto t = effective_degree_search(p, o->bound);
        Output out;
        out.payload["t"] = t ? json(*t) : json(nullptr);
        out.text = (t ? "t = " + std::to_string(*t) : std::string("none")) + "\n";
        return out;
    };
}

void emit(std::ostream& out, bool as_json, const CommandResult& r, const std::string& text) {
    if (as_json) {
        json j;
        j["status"] = r.ok ? "ok" : "error";
        j["payload"] = r.payload;
        j["diagnostics"] = r.diagnostics;
        out << j.dump(2) << "\n";
    } else {
        out << text;
    }
    out.flush();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"drinfeld-forge: exact computations with Drinfeld modules over F_q[T]", "drinfeld-forge"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    Handlers handlers;
    add_skew_mul(app, handlers);
    add_phi_a(app, handlers);
    add_torsion(app, handlers);
    add_isogenies(app, handlers);
    add_hecke_image(app, handlers);
    add_hecke_degree(app, handlers);
    add_psi(app, handlers);
    add_snf(app, handlers);
    add_class_number(app, handlers);
    add_pic(app, handlers);
    add_pic_order(app, handlers);
    add_cm_height(app, handlers);
    add_residual(app, handlers);
    add_pic_action(app, handlers);
    add_volcano(app, handlers);
    add_sigma_verify(app, handlers);
    add_degree_bound(app, handlers);
    add_cheb_count(app, handlers);
    add_cheb_check(app, handlers);
    add_effective_t(app, handlers);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    const bool as_json = format == "json";
    const CLI::App* sub = app.get_subcommands().front();
    CommandResult result;
    try {
        Output o = handlers.at(sub)();
        result.payload = std::move(o.payload);
        emit(out, as_json, result, o.text);
        return exit_ok;
    } catch (const std::invalid_argument& e) {
        result.ok = false;
        result.diagnostics.push_back(e.what());
        if (as_json) emit(out, true, result, "");
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    } catch (const std::exception& e) {
        // domain errors, budget overruns and any other failure of the computation
        result.ok = false;
        result.diagnostics.push_back(e.what());
        if (as_json) emit(out, true, result, "");
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

}  // namespace drinfeld::cli
