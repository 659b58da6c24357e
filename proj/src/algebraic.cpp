#include "noedyn/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace noedyn {

namespace {

int sign_of_rational(const Rational& r) { return sgn(r); }

// Trial-division factorization up to a fixed bound. Returns the divisor list
// of |n| if the factorization completed, otherwise an empty list (the caller
// falls back to Sturm bisection, which finds every root anyway).
std::vector<mpz_class> divisors_if_small(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) return {};
    std::vector<std::pair<mpz_class, int>> factors;
    mpz_class m = n;
    for (unsigned long p = 2; p <= 1000000UL && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            int e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                m /= static_cast<long>(p);
                ++e;
            }
            factors.emplace_back(mpz_class(static_cast<long>(p)), e);
        }
        if (mpz_class(p) * p > m) break;
    }
    if (m > 1) {
        // leftover is prime if below the square of the trial bound
        if (m < mpz_class(1000000UL) * 1000000UL || mpz_probab_prime_p(m.get_mpz_t(), 30))
            factors.emplace_back(m, 1);
        else
            return {};
    }
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : factors) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 4096) return {};  // too many candidates, not worth it
    }
    return divs;
}

// All rational roots of f; divides them out of f.
std::vector<Rational> extract_rational_roots(Polynomial& f) {
    std::vector<Rational> roots;
    if (f.degree() < 1) return roots;
    // x = 0
    while (f.degree() >= 1 && f.coeff(0) == 0) {
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = Polynomial(std::move(shifted));
        if (roots.empty() || roots.back() != 0) roots.emplace_back(0);
    }
    if (f.degree() < 1) return roots;
    // integer-primitive form
    mpz_class den_lcm = 1;
    for (const auto& c : f.coeffs())
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    ic.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) ic.push_back(c.get_num() * (den_lcm / c.get_den()));
    auto p_divs = divisors_if_small(ic.front());
    auto q_divs = divisors_if_small(ic.back());
    if (p_divs.empty() || q_divs.empty()) return roots;
    for (const auto& p : p_divs) {
        for (const auto& q : q_divs) {
            for (int s : {1, -1}) {
                Rational cand(s * p, q);
                cand.canonicalize();
                if (f.degree() >= 1 && f.eval(cand) == 0) {
                    roots.push_back(cand);
                    f = f / Polynomial::linear_root(cand);
                    // squarefree input: each root appears once
                }
            }
        }
    }
    return roots;
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
    Polynomial f = squarefree_part(p);
    chain_.push_back(f);
    if (f.degree() >= 1) {
        chain_.push_back(f.derivative());
        while (chain_.back().degree() >= 1) {
            Polynomial r = -(chain_[chain_.size() - 2] % chain_.back());
            if (r.is_zero()) break;
            chain_.push_back(std::move(r));
        }
    }
}

int SturmSequence::variations_at(const Rational& x) const {
    int vars = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = sign_of_rational(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int SturmSequence::variations_at_plus_inf() const {
    int vars = 0, prev = 0;
    for (const auto& q : chain_) {
        if (q.is_zero()) continue;
        int s = sign_of_rational(q.leading());
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int SturmSequence::variations_at_minus_inf() const {
    int vars = 0, prev = 0;
    for (const auto& q : chain_) {
        if (q.is_zero()) continue;
        int s = sign_of_rational(q.leading());
        if (q.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

int SturmSequence::count_half_open(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_open(const Rational& a, const Rational& b) const {
    int n = count_half_open(a, b);
    if (chain_.front().eval(b) == 0) --n;
    return n;
}

int SturmSequence::count_all() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

int SturmSequence::count_above(const Rational& a) const {
    return variations_at(a) - variations_at_plus_inf();
}

int SturmSequence::count_below(const Rational& b) const {
    int n = variations_at_minus_inf() - variations_at(b);
    if (chain_.front().eval(b) == 0) --n;
    return n;
}

Rational root_bound(const Polynomial& p) {
    if (p.degree() < 1) return Rational(1);
    Rational maxr(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational m = abs(p.coeff(i)) / abs(p.leading());
        if (m > maxr) maxr = m;
    }
    return maxr + 1;
}

namespace {

struct WorkingRoot {
    Polynomial f;  // squarefree factor, nonzero at both endpoints unless degenerate
    Rational lo, hi;
    int mult;
};

// One bisection step; interval keeps exactly one root of f.
void refine_working(WorkingRoot& w) {
    if (w.lo == w.hi) return;
    Rational mid = (w.lo + w.hi) / 2;
    Rational fm = w.f.eval(mid);
    if (fm == 0) {
        w.lo = w.hi = mid;
        return;
    }
    if (sgn(fm) == sgn(w.f.eval(w.lo)))
        w.lo = mid;
    else
        w.hi = mid;
}

void isolate_squarefree(const Polynomial& f, int mult, std::vector<WorkingRoot>& out) {
    Polynomial g = f;
    std::vector<Rational> rats = extract_rational_roots(g);
    for (const auto& r : rats) out.push_back({Polynomial::linear_root(r), r, r, mult});
    if (g.degree() < 1) return;
    SturmSequence sturm(g);
    Rational bound = root_bound(g);
    struct Seg {
        Rational a, b;
        int count;
    };
    std::vector<Seg> stack;
    std::vector<WorkingRoot> found;
    int total = sturm.count_open(-bound, bound);
    stack.push_back({-bound, bound, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            found.push_back({g, s.a, s.b, mult});
            continue;
        }
        Rational mid = (s.a + s.b) / 2;
        if (g.eval(mid) == 0) {
            // rational root the candidate search missed; record it and redo
            // the remaining factor from scratch (discarding this attempt)
            out.push_back({Polynomial::linear_root(mid), mid, mid, mult});
            isolate_squarefree(g / Polynomial::linear_root(mid), mult, out);
            return;
        }
        int left = sturm.count_open(s.a, mid);
        stack.push_back({s.a, mid, left});
        stack.push_back({mid, s.b, s.count - left});
    }
    for (auto& w : found) out.push_back(std::move(w));
}

bool overlaps(const WorkingRoot& a, const WorkingRoot& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<WorkingRoot> work;
    for (const auto& [f, k] : squarefree_decomposition(p)) isolate_squarefree(f, k, work);
    // distinct roots, so overlapping intervals separate under bisection
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < work.size(); ++i) {
            for (size_t j = i + 1; j < work.size(); ++j) {
                while (overlaps(work[i], work[j])) {
                    if (work[i].lo == work[i].hi && work[j].lo == work[j].hi)
                        throw std::logic_error("isolate_real_roots: duplicate root");
                    refine_working(work[i]);
                    refine_working(work[j]);
                    changed = true;
                }
            }
        }
    }
    std::sort(work.begin(), work.end(),
              [](const WorkingRoot& a, const WorkingRoot& b) { return a.lo < b.lo; });
    std::vector<IsolatedRoot> out;
    out.reserve(work.size());
    for (auto& w : work) out.push_back({w.lo, w.hi, w.mult});
    return out;
}

AlgebraicNumber::AlgebraicNumber(Polynomial modulus, Rational lo, Rational hi)
    : modulus_(modulus.monic()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("algebraic number: lo > hi");
    if (poly_gcd(modulus_, modulus_.derivative()).degree() != 0)
        throw std::invalid_argument("algebraic number: modulus not squarefree");
    if (modulus_.eval(lo_) == 0)
        hi_ = lo_;
    else if (modulus_.eval(hi_) == 0)
        lo_ = hi_;
    if (lo_ == hi_) {
        if (modulus_.eval(lo_) != 0)
            throw std::invalid_argument("algebraic number: degenerate interval misses root");
        return;
    }
    SturmSequence sturm(modulus_);
    if (sturm.count_open(lo_, hi_) != 1)
        throw std::invalid_argument("algebraic number: interval does not isolate one root");
}

AlgebraicNumber::AlgebraicNumber(const Rational& r)
    : modulus_(Polynomial::linear_root(r)), lo_(r), hi_(r) {}

int AlgebraicNumber::sign_at(const Rational& x) const { return sgn(modulus_.eval(x)); }

void AlgebraicNumber::refine() {
    if (is_rational()) return;
    Rational mid = midpoint();
    int sm = sign_at(mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    if (sm == sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicNumber::refine_to_width(const Rational& w) {
    int guard = 0;
    while (!is_rational() && width() > w) {
        refine();
        if (++guard > 100000) throw std::logic_error("refine_to_width: no convergence");
    }
}

int AlgebraicNumber::sign_of(const Polynomial& g) {
    if (g.is_zero()) return 0;
    if (is_rational()) return sgn(g.eval(lo_));
    Polynomial h = poly_gcd(g, modulus_);
    if (h.degree() >= 1) {
        SturmSequence sh(h);
        if (sh.count_open(lo_, hi_) > 0) return 0;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        auto [elo, ehi] = g.eval_interval(lo_, hi_);
        if (elo > 0) return 1;
        if (ehi < 0) return -1;
        refine();
        if (is_rational()) return sgn(g.eval(lo_));
    }
    throw std::logic_error("sign_of: refinement budget exhausted");
}

int AlgebraicNumber::compare(const Rational& r) {
    return sign_of(Polynomial::linear_root(r));
}

void AlgebraicNumber::reduce_modulus(const Polynomial& factor) {
    Polynomial f = factor.monic();
    if (is_rational()) {
        if (f.eval(lo_) != 0)
            throw std::invalid_argument("reduce_modulus: factor misses the root");
        modulus_ = std::move(f);
        return;
    }
    SturmSequence sf(f);
    if (sf.count_open(lo_, hi_) != 1)
        throw std::invalid_argument("reduce_modulus: factor does not isolate the root");
    modulus_ = std::move(f);
}

std::string AlgebraicNumber::decimal(int digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits) + 2);
    refine_to_width(Rational(mpz_class(1), scale));
    return to_decimal(midpoint(), digits);
}

double AlgebraicNumber::to_double() {
    refine_to_width(Rational(mpz_class(1), mpz_class(1) << 80));
    return midpoint().get_d();
}

AlgebraicNumber largest_real_root(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("largest_real_root: zero polynomial");
    Polynomial ps = squarefree_part(p);
    if (ps.degree() < 1) throw std::runtime_error("largest_real_root: no real roots");
    auto roots = isolate_real_roots(ps);
    if (roots.empty()) throw std::runtime_error("largest_real_root: no real roots");
    const IsolatedRoot& top = roots.back();
    return AlgebraicNumber(ps, top.lo, top.hi);
}

int root_multiplicity(const Polynomial& p, AlgebraicNumber& alpha) {
    int m = 0;
    Polynomial g = p;
    while (!g.is_zero() && alpha.sign_of(g) == 0) {
        ++m;
        g = g.derivative();
    }
    return m;
}

}  // namespace noedyn
