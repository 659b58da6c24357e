#include "noedyn/noether.hpp"

#include <sstream>
#include <stdexcept>

namespace noedyn {

ProjPoint::ProjPoint(QVector coords) : c_(std::move(coords)) {
    Eigen::Index first = -1;
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
        if (c_(i) != 0) {
            first = i;
            break;
        }
    }
    if (first < 0) throw std::invalid_argument("projective point: all coordinates zero");
    Rational inv = 1 / c_(first);
    for (Eigen::Index i = 0; i < c_.size(); ++i) c_(i) *= inv;
}

ProjPoint::ProjPoint(std::initializer_list<long> coords)
    : ProjPoint([&] {
          QVector v(static_cast<Eigen::Index>(coords.size()));
          Eigen::Index i = 0;
          for (long x : coords) v(i++) = Rational(x);
          return v;
      }()) {}

int ProjPoint::zero_count() const {
    int n = 0;
    for (Eigen::Index i = 0; i < c_.size(); ++i)
        if (c_(i) == 0) ++n;
    return n;
}

ProjPoint ProjPoint::unit(Eigen::Index dim, Eigen::Index i) {
    QVector v = QVector::Constant(dim + 1, Rational(0));
    v(i) = 1;
    return ProjPoint(std::move(v));
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < c_.size(); ++i) {
        if (i) os << ":";
        os << c_(i).get_str();
    }
    os << "]";
    return os.str();
}

bool indeterminacy_member(const ProjPoint& x) { return x.zero_count() >= 2; }

NoetherianMap::NoetherianMap(int d, std::vector<Rational> a) : d_(d), a_(std::move(a)) {
    if (d_ < 3)
        throw std::invalid_argument("noetherian map: d >= 3 required (got d = " +
                                    std::to_string(d_) + ")");
    if (static_cast<int>(a_.size()) != d_ + 1)
        throw std::invalid_argument("noetherian map: expected d+1 parameters");
    Rational sum(0);
    for (const auto& ai : a_) sum += ai;
    if (sum != 2) throw std::invalid_argument("noetherian map: parameters must sum to 2");
}

QMatrix NoetherianMap::linear_matrix() const {
    QMatrix L(d_ + 1, d_ + 1);
    for (int r = 0; r <= d_; ++r)
        for (int c = 0; c <= d_; ++c) L(r, c) = a_[static_cast<size_t>(c)] - (r == c ? 1 : 0);
    return L;
}

ProjPoint NoetherianMap::collapse_point(int i) const {
    if (i < 0 || i > d_) throw std::out_of_range("collapse_point: index out of range");
    QVector col(d_ + 1);
    for (int r = 0; r <= d_; ++r) col(r) = a_[static_cast<size_t>(i)] - (r == i ? 1 : 0);
    return ProjPoint(std::move(col));
}

std::optional<ProjPoint> apply_reciprocal(const ProjPoint& x) {
    const QVector& c = x.coords();
    const Eigen::Index n = c.size();
    QVector out(n);
    bool any = false;
    for (Eigen::Index j = 0; j < n; ++j) {
        Rational prod(1);
        for (Eigen::Index i = 0; i < n; ++i)
            if (i != j) prod *= c(i);
        out(j) = prod;
        if (prod != 0) any = true;
    }
    if (!any) return std::nullopt;
    return ProjPoint(std::move(out));
}

std::optional<ProjPoint> evaluate(const NoetherianMap& f, const ProjPoint& x) {
    auto jx = apply_reciprocal(x);
    if (!jx) return std::nullopt;
    QVector y = f.linear_matrix() * jx->coords();
    bool any = false;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (y(i) != 0) any = true;
    if (!any) return std::nullopt;  // cannot occur: L is invertible
    return ProjPoint(std::move(y));
}

std::optional<ProjPoint> evaluate_inverse(const NoetherianMap& f, const ProjPoint& x) {
    QVector y = f.linear_matrix() * x.coords();
    bool any = false;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        if (y(i) != 0) any = true;
    if (!any) return std::nullopt;
    return apply_reciprocal(ProjPoint(std::move(y)));
}

ProjPoint orbit_point_closed_form(const NoetherianMap& f, int i, int j) {
    const Rational& ai = f.a()[static_cast<size_t>(i)];
    Rational den = Rational(j) * ai - Rational(j - 1);
    if (den == 0) return ProjPoint::unit(f.d(), i);
    Rational val = Rational(j) * (ai - 1) / den;
    QVector v = QVector::Constant(f.d() + 1, Rational(1));
    v(i) = val;
    return ProjPoint(std::move(v));
}

std::optional<int> singular_orbit_length(const Rational& a) {
    // a = (N-1)/N in lowest terms means numerator = denominator - 1, a >= 0
    if (sgn(a) < 0 || a >= 1) return std::nullopt;
    if (a.get_num() != a.get_den() - 1) return std::nullopt;
    return static_cast<int>(a.get_den().get_si());
}

OrbitRecord orbit(const NoetherianMap& f, int i, int horizon) {
    if (i < 0 || i > f.d()) throw std::out_of_range("orbit: index out of range");
    if (horizon < 1) throw std::invalid_argument("orbit: horizon must be >= 1");
    OrbitRecord rec{i, false, 0, {}};
    ProjPoint p = f.collapse_point(i);
    for (int j = 1; j <= horizon; ++j) {
        if (p != orbit_point_closed_form(f, i, j))
            throw std::logic_error("orbit: iteration disagrees with the closed form at step " +
                                   std::to_string(j));
        rec.points.push_back(p);
        if (indeterminacy_member(p)) {
            rec.singular = true;
            rec.length = j;
            return rec;
        }
        auto next = evaluate(f, p);
        if (!next)
            throw std::logic_error("orbit: evaluation indeterminate off the singular pattern");
        p = *next;
    }
    rec.length = horizon;
    return rec;
}

Classification classify(const NoetherianMap& f) {
    Classification cl;
    std::vector<std::pair<int, int>> sn;  // (N, index)
    for (int i = 0; i <= f.d(); ++i) {
        if (auto n = singular_orbit_length(f.a()[static_cast<size_t>(i)])) {
            sn.emplace_back(*n, i);
            if (f.a()[static_cast<size_t>(i)] == 0) ++cl.l;
        }
    }
    std::sort(sn.begin(), sn.end());
    for (const auto& [n, i] : sn) {
        cl.S.push_back(i);
        cl.N.push_back(n);
    }
    cl.k = static_cast<int>(cl.S.size()) - 1;
    return cl;
}

RegularityReport regularity_report(const NoetherianMap& f, int horizon) {
    RegularityReport rep;
    rep.horizon = horizon;
    std::vector<OrbitRecord> orbits;
    for (int i = 0; i <= f.d(); ++i) orbits.push_back(orbit(f, i, horizon));

    for (const auto& rec : orbits) {
        if (rec.singular) {
            // (a) the terminal point must be e_i
            if (rec.points.back() != ProjPoint::unit(f.d(), rec.index)) {
                rep.singular_orbits_end_at_unit = false;
                rep.violations.push_back("singular orbit " + std::to_string(rec.index) +
                                         " ends at " + rec.points.back().str());
            }
        } else {
            // (b) no indeterminacy hit up to the horizon
            for (const auto& p : rec.points) {
                if (indeterminacy_member(p)) {
                    rep.nonsingular_orbits_avoid_indeterminacy = false;
                    rep.violations.push_back("nonsingular orbit " + std::to_string(rec.index) +
                                             " meets indeterminacy at " + p.str());
                }
            }
        }
        // (c) blow-up centers distinct within each singular orbit
        if (!rec.singular) continue;
        for (size_t a = 0; a < rec.points.size(); ++a)
            for (size_t b = a + 1; b < rec.points.size(); ++b)
                if (rec.points[a] == rec.points[b]) {
                    rep.points_distinct_within_orbit = false;
                    rep.violations.push_back("orbit " + std::to_string(rec.index) +
                                             " revisits " + rec.points[a].str());
                }
    }
    // (c) pairwise disjoint across orbits
    for (size_t i = 0; i < orbits.size(); ++i)
        for (size_t j = i + 1; j < orbits.size(); ++j)
            for (const auto& p : orbits[i].points)
                for (const auto& q : orbits[j].points)
                    if (p == q) {
                        rep.orbits_pairwise_disjoint = false;
                        rep.violations.push_back(
                            "orbits " + std::to_string(orbits[i].index) + " and " +
                            std::to_string(orbits[j].index) + " collide at " + p.str());
                    }
    return rep;
}

}  // namespace noedyn
