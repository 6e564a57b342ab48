#include "linefan/solve.hpp"

#include "linefan/resultant.hpp"
#include "linefan/rng.hpp"
#include "linefan/roots.hpp"
#include "modular.hpp"
#include "recursive.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <numeric>

namespace linefan {

namespace {

constexpr int kReseeds = 8;
constexpr int kCleanRounds = 3;

// Signals inside the residue-ring gcd: the factor splits the modulus.
struct ZeroDivisor {
    UniPoly factor;
};

// A fibre with more than one point over a root of the eliminant.
struct NotShapePosition {};

std::string var_name(int j) { return "v" + std::to_string(j); }

void trim_residue(ResiduePoly& p, const UniPoly& m) {
    for (auto& c : p) c = c % m;
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly invert_or_split(const UniPoly& a, const UniPoly& m) {
    auto [s, g] = inverse_mod(a, m);
    if (g.degree() > 0) throw ZeroDivisor{g};
    return s;
}

ResiduePoly make_monic(ResiduePoly p, const UniPoly& m) {
    UniPoly inv = invert_or_split(p.back(), m);
    for (auto& c : p) c = mul_mod(c, inv, m);
    return p;
}

// a mod b, b monic
ResiduePoly residue_rem(ResiduePoly a, const ResiduePoly& b, const UniPoly& m) {
    std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() > db) {
        UniPoly lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < db; ++j) {
            if (!b[j].is_zero()) a[shift + j] = (a[shift + j] - lead * b[j]) % m;
        }
        a.pop_back();
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

ResiduePoly residue_gcd(const std::vector<ResiduePoly>& polys, const UniPoly& m) {
    ResiduePoly g;
    for (const auto& p : polys) {
        ResiduePoly b = p;
        trim_residue(b, m);
        if (b.empty()) continue;
        if (g.empty()) {
            g = make_monic(std::move(b), m);
        } else {
            ResiduePoly a = std::move(g);
            while (!b.empty()) {
                b = make_monic(std::move(b), m);
                ResiduePoly r = residue_rem(std::move(a), b, m);
                a = std::move(b);
                b = std::move(r);
            }
            g = std::move(a);
        }
        if (g.size() == 1) break;
    }
    return g;
}

// The root c when the monic h is (t - c)^k over K[x]/(m), a single point of
// higher multiplicity; NotShapePosition otherwise.
UniPoly single_root(const ResiduePoly& h, const UniPoly& m) {
    std::size_t k = h.size() - 1;
    UniPoly c = (-h[k - 1]).scaled(Scalar(mpq_class(1, static_cast<long>(k))));
    if (k == 1) return c % m;
    // coefficients of (t - c)^k from the binomial expansion
    UniPoly minus_c = (-c) % m;
    UniPoly pw = UniPoly::constant(Scalar(1));
    mpz_class binom = 1;
    for (std::size_t j = 0; j <= k; ++j) {
        // coefficient of t^(k-j) is binom(k, j) (-c)^j
        if (!((pw.scaled(Scalar(mpq_class(binom))) - h[k - j]) % m).is_zero()) throw NotShapePosition{};
        pw = mul_mod(pw, minus_c, m);
        binom = binom * static_cast<long>(k - j) / static_cast<long>(j + 1);
    }
    return c % m;
}

// Values of v_1.. over the roots of `modulus` (v_0 itself is the root).
struct Branch {
    UniPoly modulus;
    std::vector<UniPoly> values;
};

// p(theta, values..., t) as a polynomial in t = v_target over K[theta]/(m).
ResiduePoly substitute_branch(const MultiPoly& p, int target, const Branch& b) {
    std::vector<std::vector<UniPoly>> powers(b.values.size());
    auto power = [&](std::size_t i, int e) -> const UniPoly& {
        auto& list = powers[i];
        if (list.empty()) list.push_back(UniPoly::constant(Scalar(1)));
        while (static_cast<int>(list.size()) <= e) list.push_back(mul_mod(list.back(), b.values[i], b.modulus));
        return list[static_cast<std::size_t>(e)];
    };
    ResiduePoly out(static_cast<std::size_t>(std::max(0, p.degree_in(target) + 1)));
    for (const auto& [e, c] : p.terms()) {
        UniPoly coef = UniPoly::monomial(e[0], c) % b.modulus;
        for (std::size_t i = 0; i < b.values.size() && !coef.is_zero(); ++i) {
            int k = e[i + 1];
            if (k != 0) coef = mul_mod(coef, power(i, k), b.modulus);
        }
        out[e[target]] += coef;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

MultiPoly combination(const std::vector<MultiPoly>& polys, Lcg& rng) {
    MultiPoly s(polys.front().nvars());
    for (const auto& p : polys) s += p.scaled(Scalar(rng.nonzero(9)));
    return s;
}

// levels[k] holds polynomials in v_0..v_{k-1}; levels[nv] is the input.
std::vector<std::vector<MultiPoly>> eliminate(const std::vector<MultiPoly>& sys, int nv, Lcg& rng) {
    std::vector<std::vector<MultiPoly>> levels(static_cast<std::size_t>(nv + 1));
    levels[nv] = sys;
    for (int j = nv - 1; j >= 1; --j) {
        std::vector<MultiPoly> pass;
        std::vector<MultiPoly> with;
        for (const auto& p : levels[j + 1]) (p.uses_var(j) ? with : pass).push_back(p);
        if (with.empty()) throw PositiveDimensional("variable " + var_name(j) + " is unconstrained");
        std::vector<MultiPoly> next = pass;
        if (with.size() >= 2) {
            std::stable_sort(with.begin(), with.end(), [j](const MultiPoly& a, const MultiPoly& b) {
                if (a.degree_in(j) != b.degree_in(j)) return a.degree_in(j) < b.degree_in(j);
                return a.size() < b.size();
            });
            bool found = false;
            for (std::size_t pi = 0; pi < with.size() && !found; ++pi) {
                const MultiPoly& pivot = with[pi];
                std::vector<MultiPoly> others;
                for (std::size_t k = 0; k < with.size(); ++k) {
                    if (k != pi) others.push_back(with[k]);
                }
                std::vector<MultiPoly> targets;
                if (others.size() <= 3 || pivot.degree_in(j) == 1) {
                    targets = others;
                } else {
                    targets = {combination(others, rng), combination(others, rng)};
                }
                for (const auto& t : targets) {
                    MultiPoly r = resultant(pivot, t, j);
                    if (!r.is_zero()) {
                        next.push_back(r.primitive());
                        found = true;
                    }
                }
            }
            if (!found) throw PositiveDimensional("eliminant Res_" + var_name(j) + " vanishes identically");
        }
        levels[j] = std::move(next);
    }
    return levels;
}

int count_exact(const std::vector<std::vector<MultiPoly>>& levels, int nv, const UniPoly& g) {
    std::vector<Branch> branches{{g, {}}};
    for (int j = 1; j < nv; ++j) {
        std::vector<Branch> next;
        for (const auto& b : branches) {
            std::vector<ResiduePoly> residues;
            for (const auto& p : levels[j + 1]) residues.push_back(substitute_branch(p, j, b));
            for (auto& piece : split_gcd(residues, b.modulus)) {
                const ResiduePoly& h = piece.gcd;
                if (h.empty()) {
                    if (j == nv - 1) throw PositiveDimensional("positive-dimensional fibre in " + var_name(j));
                    throw NotShapePosition{};
                }
                if (h.size() == 1) continue;
                Branch nb{piece.modulus, {}};
                for (const auto& v : b.values) nb.values.push_back(v % piece.modulus);
                nb.values.push_back(single_root(h, piece.modulus));
                next.push_back(std::move(nb));
            }
        }
        branches = std::move(next);
    }
    int count = 0;
    for (const auto& b : branches) count += b.modulus.degree();
    return count;
}

// The same back-substitution over F_p, where i maps to a square root of -1.
class ModularCount {
public:
    using Poly = detail::PrimeField::Poly;
    using Residue = std::vector<Poly>;
    using Sparse = std::vector<std::pair<Exponents, detail::u64>>;

    struct BadPrime {};

    explicit ModularCount(detail::PrimeField f) : f_(f) {}

    int run(const std::vector<std::vector<MultiPoly>>& levels, int nv, const Poly& g) {
        std::vector<Branch> branches{{g, {f_.rem(Poly{0, 1}, g)}}};
        for (int j = 1; j < nv; ++j) {
            std::vector<Sparse> polys;
            for (const auto& p : levels[static_cast<std::size_t>(j + 1)]) polys.push_back(reduce(p));
            std::vector<Branch> next;
            for (const auto& b : branches) {
                std::vector<Residue> residues;
                for (const auto& p : polys) residues.push_back(substitute(p, j, b));
                for (auto& [m, h] : split(residues, b.modulus)) {
                    if (h.empty()) {
                        if (j == nv - 1) throw PositiveDimensional("positive-dimensional fibre in " + var_name(j));
                        throw NotShapePosition{};
                    }
                    if (h.size() == 1) continue;
                    std::vector<Poly> values;
                    for (const auto& v : b.values) values.push_back(f_.rem(v, m));
                    try {
                        Poly root = single_root(h, m);
                        values.push_back(std::move(root));
                        next.push_back({m, std::move(values)});
                    } catch (const NotShapePosition&) {
                        for (auto& nb : merge_fibre(m, values, h)) next.push_back(std::move(nb));
                    }
                }
            }
            branches = std::move(next);
        }
        int count = 0;
        for (const auto& b : branches) count += detail::PrimeField::degree(b.modulus);
        return count;
    }

private:
    // values[i] is v_i as a polynomial in the primitive element.
    struct Branch {
        Poly modulus;
        std::vector<Poly> values;
    };
    struct ZeroDivisor {
        Poly factor;
    };

    // A fibre of several points: its squarefree part, then a new primitive
    // element theta + lambda*t for the algebra K[theta]/(m)[t]/(h).
    std::vector<Branch> merge_fibre(const Poly& modulus, const std::vector<Poly>& values, const Residue& h) const {
        std::vector<Branch> out;
        for (auto& [m, d] : split({h, residue_derivative(h)}, modulus)) {
            std::vector<Poly> vals;
            for (const auto& v : values) vals.push_back(f_.rem(v, m));
            Residue hm = h;
            for (auto& c : hm) c = f_.rem(c, m);
            Residue sf = d.size() > 1 ? residue_quotient(hm, d, m) : hm;
            if (sf.size() == 2) {
                vals.push_back(f_.rem(f_.scale(sf[0], f_.p() - 1), m));
                out.push_back({m, std::move(vals)});
                continue;
            }
            bool merged = false;
            for (detail::u64 lambda = 1; lambda <= 8 && !merged; ++lambda) {
                if (auto nb = primitive_merge(m, vals, sf, lambda)) {
                    out.push_back(std::move(*nb));
                    merged = true;
                }
            }
            if (!merged) throw NotShapePosition{};
        }
        return out;
    }

    Residue residue_derivative(const Residue& h) const {
        Residue d;
        for (std::size_t k = 1; k < h.size(); ++k) d.push_back(f_.scale(h[k], k % f_.p()));
        while (!d.empty() && d.back().empty()) d.pop_back();
        return d;
    }

    // a / b for monic b dividing a over K[theta]/(m)
    Residue residue_quotient(Residue a, const Residue& b, const Poly& m) const {
        std::size_t db = b.size() - 1;
        Residue q(a.size() - db);
        while (a.size() > db) {
            Poly lead = a.back();
            std::size_t shift = a.size() - 1 - db;
            q[shift] = lead;
            for (std::size_t j = 0; j < db; ++j) a[shift + j] = f_.rem(f_.sub(a[shift + j], f_.mul(lead, b[j])), m);
            a.pop_back();
        }
        return q;
    }

    std::optional<Branch> primitive_merge(const Poly& m, const std::vector<Poly>& vals, const Residue& h,
                                          detail::u64 lambda) const {
        const std::size_t dm = m.size() - 1;
        const std::size_t k = h.size() - 1;
        const std::size_t dim = dm * k;
        auto reduce_h = [&](Residue a) {
            for (auto& c : a) c = f_.rem(c, m);
            while (!a.empty() && a.back().empty()) a.pop_back();
            return a.size() >= h.size() ? rem(std::move(a), h, m) : a;
        };
        auto times = [&](const Residue& a, const Residue& b) {
            if (a.empty() || b.empty()) return Residue{};
            Residue r(a.size() + b.size() - 1);
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
            }
            return reduce_h(std::move(r));
        };
        auto flatten = [&](const Residue& a) {
            std::vector<detail::u64> v(dim, 0);
            for (std::size_t j = 0; j < a.size(); ++j) {
                for (std::size_t i = 0; i < a[j].size(); ++i) v[j * dm + i] = a[j][i];
            }
            return v;
        };
        // theta is the primitive element of the current branch
        Residue theta_prime = reduce_h(Residue{Poly{0, 1}, Poly{lambda}});
        std::vector<std::vector<detail::u64>> cols;
        Residue pw = reduce_h(Residue{Poly{1}});
        for (std::size_t l = 0; l <= dim; ++l) {
            cols.push_back(flatten(pw));
            pw = times(pw, theta_prime);
        }
        // targets: theta^dim, the old coordinates, the new one
        std::vector<std::vector<detail::u64>> rhs{cols.back()};
        cols.pop_back();
        for (const auto& v : vals) rhs.push_back(flatten(Residue{v}));
        rhs.push_back(flatten(Residue{Poly{}, Poly{1}}));
        auto sol = solve_columns(cols, rhs);
        if (!sol) return std::nullopt;
        Poly mu(dim + 1, 0);
        mu[dim] = 1;
        for (std::size_t l = 0; l < dim; ++l) mu[l] = f_.neg((*sol)[0][l]);
        Branch out{mu, {}};
        for (std::size_t r = 1; r < sol->size(); ++r) {
            Poly v = (*sol)[r];
            detail::PrimeField::trim(v);
            out.values.push_back(std::move(v));
        }
        return out;
    }

    // Solutions x of sum_l x_l cols[l] = rhs[r] for each r; empty when the
    // columns are dependent.
    std::optional<std::vector<std::vector<detail::u64>>> solve_columns(
        const std::vector<std::vector<detail::u64>>& cols, const std::vector<std::vector<detail::u64>>& rhs) const {
        const std::size_t n = cols.size();
        const std::size_t w = n + rhs.size();
        std::vector<std::vector<detail::u64>> a(n, std::vector<detail::u64>(w, 0));
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
            for (std::size_t c = 0; c < rhs.size(); ++c) a[r][n + c] = rhs[c][r];
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (piv < n && a[piv][c] == 0) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(a[piv], a[c]);
            detail::u64 inv = f_.inv(a[c][c]);
            for (auto& x : a[c]) x = f_.mul(x, inv);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || a[r][c] == 0) continue;
                detail::u64 factor = a[r][c];
                for (std::size_t k = c; k < w; ++k) a[r][k] = f_.sub(a[r][k], f_.mul(factor, a[c][k]));
            }
        }
        std::vector<std::vector<detail::u64>> out(rhs.size(), std::vector<detail::u64>(n));
        for (std::size_t c = 0; c < rhs.size(); ++c) {
            for (std::size_t r = 0; r < n; ++r) out[c][r] = a[r][n + c];
        }
        return out;
    }

    Sparse reduce(const MultiPoly& p) const {
        Sparse out;
        for (const auto& [e, c] : p.terms()) {
            auto v = f_.reduce(c);
            if (!v) throw BadPrime{};
            if (*v != 0) out.emplace_back(e, *v);
        }
        return out;
    }

    Residue substitute(const Sparse& p, int target, const Branch& b) const {
        std::vector<std::vector<Poly>> powers(b.values.size());
        auto power = [&](std::size_t i, int e) -> const Poly& {
            auto& list = powers[i];
            if (list.empty()) list.push_back(Poly{1});
            while (static_cast<int>(list.size()) <= e) list.push_back(f_.mul_mod(list.back(), b.values[i], b.modulus));
            return list[static_cast<std::size_t>(e)];
        };
        Residue out;
        for (const auto& [e, c] : p) {
            Poly coef{c};
            for (std::size_t i = 0; i < b.values.size() && !coef.empty(); ++i) {
                if (e[i] != 0) coef = f_.mul_mod(coef, power(i, e[i]), b.modulus);
            }
            auto t = static_cast<std::size_t>(e[static_cast<std::size_t>(target)]);
            if (out.size() <= t) out.resize(t + 1);
            out[t] = f_.add(out[t], coef);
        }
        while (!out.empty() && out.back().empty()) out.pop_back();
        return out;
    }

    Residue make_monic(Residue p, const Poly& m) const {
        auto [inv, g] = f_.inverse_mod(p.back(), m);
        if (g.size() > 1) throw ZeroDivisor{g};
        for (auto& c : p) c = f_.mul_mod(c, inv, m);
        return p;
    }

    Residue rem(Residue a, const Residue& b, const Poly& m) const {
        std::size_t db = b.size() - 1;
        while (!a.empty() && a.size() > db) {
            Poly lead = a.back();
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t j = 0; j < db; ++j) {
                if (!b[j].empty()) a[shift + j] = f_.rem(f_.sub(a[shift + j], f_.mul(lead, b[j])), m);
            }
            a.pop_back();
            while (!a.empty() && a.back().empty()) a.pop_back();
        }
        return a;
    }

    Residue gcd(const std::vector<Residue>& polys, const Poly& m) const {
        Residue g;
        for (const auto& p : polys) {
            Residue b = p;
            for (auto& c : b) c = f_.rem(c, m);
            while (!b.empty() && b.back().empty()) b.pop_back();
            if (b.empty()) continue;
            if (g.empty()) {
                g = make_monic(std::move(b), m);
            } else {
                Residue a = std::move(g);
                while (!b.empty()) {
                    b = make_monic(std::move(b), m);
                    Residue r = rem(std::move(a), b, m);
                    a = std::move(b);
                    b = std::move(r);
                }
                g = std::move(a);
            }
            if (g.size() == 1) break;
        }
        return g;
    }

    std::vector<std::pair<Poly, Residue>> split(const std::vector<Residue>& polys, const Poly& modulus) const {
        std::vector<std::pair<Poly, Residue>> out;
        std::vector<Poly> work{f_.monic(modulus)};
        while (!work.empty()) {
            Poly m = std::move(work.back());
            work.pop_back();
            if (m.size() < 2) continue;
            try {
                out.emplace_back(m, gcd(polys, m));
            } catch (const ZeroDivisor& z) {
                work.push_back(f_.monic(f_.quotient(m, z.factor)));
                work.push_back(f_.monic(z.factor));
            }
        }
        return out;
    }

    Poly single_root(const Residue& h, const Poly& m) const {
        std::size_t k = h.size() - 1;
        Poly c = f_.scale(h[k - 1], f_.neg(f_.inv(k % f_.p())));
        if (k == 1) return f_.rem(c, m);
        Poly minus_c = f_.rem(f_.scale(c, f_.p() - 1), m);
        Poly pw{1};
        detail::u64 binom = 1;
        for (std::size_t j = 0; j <= k; ++j) {
            if (!f_.rem(f_.sub(f_.scale(pw, binom), h[k - j]), m).empty()) throw NotShapePosition{};
            pw = f_.mul_mod(pw, minus_c, m);
            binom = f_.mul(f_.mul(binom, (k - j) % f_.p()), f_.inv((j + 1) % f_.p()));
        }
        return f_.rem(c, m);
    }

    detail::PrimeField f_;
};

// Outcome of one back-substitution: a count, or -1 for a fibre that is not a
// single point, or -2 for a positive-dimensional fibre.
int count_once(const std::vector<MultiPoly>& sys, int nv, Lcg& rng) {
    auto levels = eliminate(sys, nv, rng);
    std::vector<UniPoly> base;
    for (const auto& p : levels[1]) base.push_back(UniPoly::from_multi(p, 0));
    if (base.empty()) throw PositiveDimensional("variable " + var_name(0) + " is unconstrained");
    UniPoly g = gcd_many(base);
    // Resultants carry extraneous factors; another elimination of a mixed
    // copy of the system usually carries different ones.
    for (int round = 0; round < kCleanRounds && nv > 1 && g.degree() > 0; ++round) {
        std::vector<MultiPoly> mixed = sys;
        for (std::size_t i = 1; i < mixed.size(); ++i) {
            for (std::size_t k = 0; k < i; ++k) mixed[i] += sys[k].scaled(Scalar(rng.uniform(-3, 3)));
        }
        std::vector<std::vector<MultiPoly>> mixed_levels;
        try {
            mixed_levels = eliminate(mixed, nv, rng);
        } catch (const PositiveDimensional&) {
            break;
        }
        std::vector<UniPoly> other;
        for (const auto& p : mixed_levels[1]) other.push_back(UniPoly::from_multi(p, 0));
        if (other.empty()) break;
        other.push_back(g);
        UniPoly h = gcd_many(other);
        if (h.degree() == g.degree()) break;
        g = std::move(h);
    }
    g = squarefree_part(g);
    if (g.degree() < 1) return 0;
    if (nv == 1) return g.degree();

    constexpr int kVotesNeeded = 2;
    constexpr int kMaxPrimes = 5;
    std::map<int, int> votes;
    std::string dimension_note;
    int used = 0;
    for (std::size_t k = 0; k < 64 && used < kMaxPrimes; ++k) {
        detail::PrimeField f = detail::PrimeField::nth(k);
        auto gp = f.reduce(g);
        if (!gp || detail::PrimeField::degree(*gp) != g.degree()) continue;
        if (f.gcd(*gp, f.derivative(*gp)).size() != 1) continue;
        int outcome = 0;
        try {
            outcome = ModularCount(f).run(levels, nv, *gp);
        } catch (const ModularCount::BadPrime&) {
            continue;
        } catch (const NotShapePosition&) {
            outcome = -1;
        } catch (const PositiveDimensional& e) {
            outcome = -2;
            dimension_note = e.what();
        }
        ++used;
        if (++votes[outcome] < kVotesNeeded) continue;
        if (outcome == -1) throw NotShapePosition{};
        if (outcome == -2) throw PositiveDimensional(dimension_note);
        return outcome;
    }
    return count_exact(levels, nv, g);
}

ExactMatrix random_invertible(int n, Lcg& rng) {
    for (;;) {
        ExactMatrix a(n, n);
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) a.at(r, c) = Scalar(rng.uniform(-4, 4));
        }
        if (!a.determinant().is_zero()) return a;
    }
}

// Bivariate polynomials as coefficient lists in y over K[x].
using BiRec = std::vector<UniPoly>;

BiRec to_rec(const MultiPoly& f) {
    BiRec r;
    for (const auto& c : f.coefficients_in(1)) r.push_back(UniPoly::from_multi(c, 0));
    detail::trim(r);
    return r;
}

BiRec rec_primitive(BiRec a) {
    UniPoly c = gcd_many(a);
    for (auto& x : a) x = exact_div(x, c);
    return a;
}

BiRec bivariate_gcd(BiRec a, BiRec b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    UniPoly content = gcd(gcd_many(a), gcd_many(b));
    a = rec_primitive(std::move(a));
    b = rec_primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    UniPoly one = UniPoly::constant(Scalar(1));
    while (!b.empty()) {
        if (b.size() == 1) {
            a = {one};
            break;
        }
        BiRec r = detail::prem(a, b, one);
        a = std::move(b);
        b = r.empty() ? std::move(r) : rec_primitive(std::move(r));
    }
    for (auto& x : a) x = x * content;
    return a;
}

bool nonconstant(const BiRec& g) { return g.size() > 1 || (g.size() == 1 && g[0].degree() > 0); }

// Curves after a shear with every y-leading coefficient a nonzero constant.
bool leading_in_y_constant(const std::vector<MultiPoly>& f) {
    for (const auto& p : f) {
        std::vector<Scalar> e{Scalar(0), Scalar(1), Scalar(0)};
        if (p.evaluate(e).is_zero()) return false;
    }
    return true;
}

std::vector<MultiPoly> dehomogenize_z(const std::vector<MultiPoly>& f) {
    std::vector<MultiPoly> out;
    for (const auto& p : f) out.push_back(p.specialize(2, Scalar(1)).with_nvars(2));
    return out;
}

bool common_factor(const std::vector<MultiPoly>& aff) {
    BiRec g;
    for (const auto& p : aff) {
        g = bivariate_gcd(std::move(g), to_rec(p));
        if (!nonconstant(g)) return false;
    }
    return true;
}

std::vector<MultiPoly> nonzero_polys(const PlaneSystem& sys) {
    std::vector<MultiPoly> out;
    for (const auto& p : sys.polys) {
        if (!p.is_zero()) out.push_back(p);
    }
    return out;
}

// Common zeros on the line z = 0, given no curve passes through [0,1,0].
bool points_at_infinity(const std::vector<MultiPoly>& f) {
    std::vector<UniPoly> restricted;
    for (const auto& p : f) {
        MultiPoly q = p.specialize(2, Scalar(0)).specialize(0, Scalar(1));
        restricted.push_back(UniPoly::from_multi(q, 1));
    }
    return gcd_many(restricted).degree() > 0;
}

// Remainder of a by a monic b in K[x][y].
BiRec rec_rem(BiRec a, const BiRec& b) {
    std::size_t db = b.size() - 1;
    while (a.size() > db) {
        UniPoly lead = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j < db; ++j) {
            if (!b[j].is_zero()) a[shift + j] -= lead * b[j];
        }
        a.pop_back();
        detail::trim(a);
    }
    return a;
}

// Product of the invariant factors of the K[x]-module K[x,y]/(pivot, others):
// its degree is the total length and its root orders are the local lengths.
UniPoly length_divisor(const BiRec& pivot_in, const std::vector<BiRec>& others, int distinct) {
    Scalar inv = pivot_in.back().leading().inverse();
    BiRec pivot;
    for (const auto& c : pivot_in) pivot.push_back(c.scaled(inv));
    std::size_t m = pivot.size() - 1;
    std::vector<BiRec> cols;
    for (const auto& g : others) {
        BiRec cur = rec_rem(g, pivot);
        for (std::size_t j = 0; j < m; ++j) {
            BiRec col = cur;
            col.resize(m);
            cols.push_back(std::move(col));
            cur.insert(cur.begin(), UniPoly());
            cur = rec_rem(std::move(cur), pivot);
        }
    }
    UniPoly d;
    std::vector<std::size_t> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    if (cols.size() < m) throw NotShapePosition{};
    for (;;) {
        std::vector<std::vector<UniPoly>> minor(m, std::vector<UniPoly>(m));
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) minor[r][c] = cols[pick[c]][r];
        }
        UniPoly det = determinant(std::move(minor));
        if (!det.is_zero()) {
            d = d.is_zero() ? det.monic() : gcd(d, det);
            if (d.degree() == distinct && gcd(d, d.derivative()).degree() == 0) return d;
            if (d.degree() == 0) return d;
        }
        // next combination
        std::size_t k = m;
        while (k > 0 && pick[k - 1] == cols.size() - m + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t t = k; t < m; ++t) pick[t] = pick[t - 1] + 1;
    }
    if (d.is_zero()) throw NotShapePosition{};
    return d;
}

std::vector<Scalar> apply3(const ExactMatrix& a, const Scalar& x, const Scalar& y) {
    std::vector<Scalar> v{x, y, Scalar(1)};
    return a.apply(v);
}

void solve_sheared(FanCount& fc, const std::vector<MultiPoly>& aff, const ExactMatrix& a) {
    std::size_t p = 0;
    for (std::size_t k = 1; k < aff.size(); ++k) {
        if (aff[k].total_degree() < aff[p].total_degree()) p = k;
    }
    std::vector<UniPoly> elim;
    std::vector<BiRec> others;
    for (std::size_t k = 0; k < aff.size(); ++k) {
        if (k == p) continue;
        others.push_back(to_rec(aff[k]));
        UniPoly r = UniPoly::from_multi(resultant(aff[p], aff[k], 1), 0);
        if (!r.is_zero()) elim.push_back(std::move(r));
    }
    if (elim.empty()) throw NotShapePosition{};
    UniPoly g = squarefree_part(gcd_many(elim));
    std::vector<Branch> branches;
    if (g.degree() >= 1) {
        std::vector<ResiduePoly> residues;
        Branch root{g, {}};
        for (const auto& f : aff) residues.push_back(substitute_branch(f, 1, root));
        for (auto& piece : split_gcd(residues, g)) {
            const ResiduePoly& h = piece.gcd;
            if (h.empty()) throw NotShapePosition{};
            if (h.size() == 1) continue;
            branches.push_back({piece.modulus, {single_root(h, piece.modulus)}});
        }
    }
    int distinct = 0;
    for (const auto& b : branches) distinct += b.modulus.degree();
    UniPoly d = distinct == 0 ? UniPoly::constant(Scalar(1)) : length_divisor(to_rec(aff[p]), others, distinct);
    if (squarefree_part(d).degree() != distinct) throw NotShapePosition{};

    fc.distinct = distinct;
    fc.bezout_total = d.degree();
    fc.mult_profile.clear();
    auto parts = squarefree_decomposition(d);
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (int e = 0; e < parts[k].degree(); ++e) fc.mult_profile.push_back(static_cast<int>(k) + 1);
    }
    std::sort(fc.mult_profile.rbegin(), fc.mult_profile.rend());

    fc.branches.clear();
    fc.rational_points.clear();
    for (const auto& b : branches) {
        FanBranch fb{b.modulus, {}};
        const UniPoly& phi = b.values[0];
        for (int r = 0; r < 3; ++r) {
            UniPoly c = UniPoly::x().scaled(a.at(r, 0)) + phi.scaled(a.at(r, 1)) + UniPoly::constant(a.at(r, 2));
            fb.coords.push_back(c % b.modulus);
        }
        fc.branches.push_back(std::move(fb));
        for (const auto& x0 : gaussian_rational_roots(b.modulus)) {
            ProjPoint pt(apply3(a, x0, phi.evaluate(x0)));
            fc.rational_points.push_back({pt.normalized(), root_order(d, x0)});
        }
    }
    std::stable_sort(fc.rational_points.begin(), fc.rational_points.end(), [](const FanPoint& u, const FanPoint& v) {
        if (u.multiplicity != v.multiplicity) return u.multiplicity > v.multiplicity;
        return u.point.to_string() < v.point.to_string();
    });
}

// Affine chart centred at pt: the two remaining coordinates become u, v.
std::vector<MultiPoly> local_chart(const std::vector<MultiPoly>& polys, const ProjPoint& pt) {
    ProjPoint q = pt.normalized();
    int a = 0;
    while (q[a].is_zero()) ++a;
    std::vector<MultiPoly> images;
    int next = 0;
    for (int k = 0; k < 3; ++k) {
        if (k == a) {
            images.push_back(MultiPoly::constant(2, Scalar(1)));
        } else {
            images.push_back(MultiPoly::constant(2, q[k]) + MultiPoly::variable(2, next++));
        }
    }
    std::vector<MultiPoly> out;
    for (const auto& p : polys) out.push_back(p.substitute(images));
    return out;
}

// dim K[u,v] / (I + m^(D+1))
int truncated_colength(const std::vector<MultiPoly>& local, int D) {
    auto column = [](int i, int j) {  // monomial u^i v^j, graded
        int d = i + j;
        return d * (d + 1) / 2 + j;
    };
    int n = (D + 1) * (D + 2) / 2;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& f : local) {
        if (f.is_zero()) continue;
        int ord = f.order();
        for (int d = 0; d + ord <= D; ++d) {
            for (int j = 0; j <= d; ++j) {
                std::vector<Scalar> row(static_cast<std::size_t>(n));
                for (const auto& [e, c] : f.terms()) {
                    int ui = e[0] + (d - j);
                    int vj = e[1] + j;
                    if (ui + vj <= D) row[static_cast<std::size_t>(column(ui, vj))] = c;
                }
                rows.push_back(std::move(row));
            }
        }
    }
    if (rows.empty()) return n;
    return n - ExactMatrix::from_rows(rows).rank();
}

void check_common_zero(const PlaneSystem& sys, const ProjPoint& pt) {
    if (pt.size() != 3) throw MathError("plane point needs three coordinates");
    for (const auto& p : sys.polys) {
        if (!p.evaluate(pt.coords()).is_zero()) throw MathError("point is not a common zero");
    }
}

}  // namespace

PlaneSystem PlaneSystem::make(std::vector<MultiPoly> polys) {
    PlaneSystem s;
    for (auto& p : polys) {
        if (p.nvars() != 3) throw MathError("plane system needs three variables");
        if (!p.is_homogeneous()) throw MathError("plane system member is not homogeneous");
        s.degrees.push_back(p.total_degree());
        s.polys.push_back(std::move(p));
    }
    if (s.polys.empty()) throw MathError("empty plane system");
    return s;
}

std::vector<SplitPiece> split_gcd(const std::vector<ResiduePoly>& polys, const UniPoly& modulus) {
    std::vector<SplitPiece> out;
    std::vector<UniPoly> work{modulus.monic()};
    while (!work.empty()) {
        UniPoly m = std::move(work.back());
        work.pop_back();
        if (m.degree() < 1) continue;
        try {
            out.push_back({m, residue_gcd(polys, m)});
        } catch (const ZeroDivisor& z) {
            work.push_back(exact_div(m, z.factor).monic());
            work.push_back(z.factor.monic());
        }
    }
    return out;
}

bool has_common_curve(const PlaneSystem& sys) {
    auto polys = nonzero_polys(sys);
    for (const auto& p : polys) {
        if (p.is_constant()) return false;
    }
    if (polys.size() < 2) return true;
    Lcg rng(0);
    for (;;) {
        ExactMatrix a = random_invertible(3, rng);
        std::vector<MultiPoly> f;
        for (const auto& p : polys) f.push_back(linear_change(p, a));
        if (leading_in_y_constant(f)) return common_factor(dehomogenize_z(f));
    }
}

FanCount count_plane_points(const PlaneSystem& sys, std::uint64_t seed) {
    FanCount fc;
    fc.seed = seed;
    auto polys = nonzero_polys(sys);
    for (const auto& p : polys) {
        if (p.is_constant()) return fc;
    }
    if (polys.size() < 2) {
        fc.infinite = true;
        return fc;
    }
    Lcg rng(seed);
    for (int attempt = 0; attempt <= kReseeds; ++attempt) {
        ExactMatrix a = random_invertible(3, rng);
        fc.attempts = attempt + 1;
        fc.shear = a;
        std::vector<MultiPoly> f;
        for (const auto& p : polys) f.push_back(linear_change(p, a));
        if (!leading_in_y_constant(f)) continue;
        auto aff = dehomogenize_z(f);
        if (common_factor(aff)) {
            fc.infinite = true;
            return fc;
        }
        if (points_at_infinity(f)) continue;
        try {
            solve_sheared(fc, aff, a);
            return fc;
        } catch (const NotShapePosition&) {
        }
    }
    throw MathError("no generic position found");
}

namespace {

// True when a component shared by all the curves passes through pt.
bool common_curve_through(const PlaneSystem& sys, const ProjPoint& pt) {
    auto polys = nonzero_polys(sys);
    for (const auto& p : polys) {
        if (p.is_constant()) return false;
    }
    if (polys.size() < 2) return true;
    Lcg rng(0);
    for (;;) {
        ExactMatrix a = random_invertible(3, rng);
        std::vector<MultiPoly> f;
        for (const auto& p : polys) f.push_back(linear_change(p, a));
        if (!leading_in_y_constant(f)) continue;
        std::vector<Scalar> v = a.inverse().apply(pt.coords());
        if (v[2].is_zero()) continue;
        BiRec g;
        for (const auto& p : dehomogenize_z(f)) {
            g = bivariate_gcd(std::move(g), to_rec(p));
            if (!nonconstant(g)) return false;
        }
        Scalar x = v[0] / v[2];
        Scalar y = v[1] / v[2];
        Scalar acc;
        for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * y + it->evaluate(x);
        return acc.is_zero();
    }
}

}  // namespace

int local_multiplicity(const PlaneSystem& sys, const ProjPoint& pt) {
    check_common_zero(sys, pt);
    if (common_curve_through(sys, pt)) throw PositiveDimensional("positive-dimensional at point");
    auto local = local_chart(sys.polys, pt);
    int d0 = *std::max_element(sys.degrees.begin(), sys.degrees.end());
    int cap = d0 * d0 + 2;
    int prev = truncated_colength(local, d0);
    for (int d = d0 + 1; d <= d0 + cap; ++d) {
        int cur = truncated_colength(local, d);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw PositiveDimensional("positive-dimensional at point");
}

bool is_reduced_at(const PlaneSystem& sys, const ProjPoint& pt) {
    check_common_zero(sys, pt);
    auto local = local_chart(sys.polys, pt);
    std::vector<std::vector<Scalar>> linear;
    for (const auto& f : local) {
        Exponents eu{};
        Exponents ev{};
        eu[0] = 1;
        ev[1] = 1;
        linear.push_back({f.coefficient(eu), f.coefficient(ev)});
    }
    if (ExactMatrix::from_rows(linear).rank() == 2) return true;
    return local_multiplicity(sys, pt) == 1;
}

int count_affine_solutions(const std::vector<MultiPoly>& eqs, std::uint64_t seed) {
    if (eqs.empty()) throw MathError("empty system");
    int nv = eqs.front().nvars();
    std::vector<MultiPoly> sys;
    for (const auto& p : eqs) {
        if (p.nvars() != nv) throw MathError("ring mismatch in system");
        if (p.is_zero()) continue;
        if (p.is_constant()) return 0;
        sys.push_back(p);
    }
    if (nv == 0) return 1;
    if (sys.empty()) throw PositiveDimensional("no nonzero equations");
    Lcg rng(seed);
    for (int attempt = 0; attempt <= kReseeds; ++attempt) {
        std::vector<MultiPoly> cur = sys;
        if (attempt > 0 && attempt < nv) {
            // cheap first: another variable leads
            std::vector<int> order(static_cast<std::size_t>(nv));
            std::iota(order.begin(), order.end(), 0);
            std::swap(order[0], order[static_cast<std::size_t>(attempt)]);
            for (auto& p : cur) p = p.rename(order, nv);
        } else if (attempt > 0) {
            std::vector<MultiPoly> images;
            MultiPoly first = MultiPoly::variable(nv, 0);
            for (int j = 1; j < nv; ++j) first += MultiPoly::variable(nv, j).scaled(Scalar(rng.nonzero(3)));
            images.push_back(first);
            for (int j = 1; j < nv; ++j) images.push_back(MultiPoly::variable(nv, j));
            for (auto& p : cur) p = p.substitute(images);
        }
        try {
            return count_once(cur, nv, rng);
        } catch (const NotShapePosition&) {
        }
    }
    throw MathError("no generic position found");
}

}  // namespace linefan
