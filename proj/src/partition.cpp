#include "richlines/partition.hpp"

#include "richlines/errors.hpp"
#include "richlines/linalg.hpp"
#include "richlines/rng.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace richlines {

std::string to_string(const SignVector& s) {
    std::string out;
    for (int x : s) out += x > 0 ? '+' : (x < 0 ? '-' : '0');
    return out;
}

MultiPoly PartitionPoly::product() const {
    if (factors.empty()) return MultiPoly::constant(0, 1);
    MultiPoly p = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) p = p * factors[i];
    return p;
}

SignVector PartitionPoly::signs(const Point& p) const {
    SignVector s;
    s.reserve(factors.size());
    for (const auto& f : factors) s.push_back(sign(f.eval(p)));
    return s;
}

std::size_t CellMap::max_cell_size() const {
    std::size_t m = 0;
    for (const auto& [sv, pts] : cells) m = std::max(m, pts.size());
    return m;
}

std::size_t CellMap::point_count() const {
    std::size_t n = boundary.size();
    for (const auto& [sv, pts] : cells) n += pts.size();
    return n;
}

Rational AffineFunctional::operator()(const Vector& y) const { return dot(coeffs, y) + constant; }

Point veronese_lift(const Point& p, unsigned t) {
    if (t < 1) throw PreconditionError("veronese_lift: t must be >= 1");
    auto monos = monomials(p.dim(), 1, t);
    Vector out;
    out.reserve(monos.size());
    for (const auto& e : monos) out.push_back(monomial_value(e, p));
    return Point(std::move(out));
}

std::size_t lift_dimension(std::size_t d, unsigned t) {
    return static_cast<std::size_t>(binomial(static_cast<long long>(t + d), static_cast<long long>(d))) - 1;
}

unsigned lift_degree_for(std::size_t d, std::size_t parts) {
    unsigned t = 1;
    while (lift_dimension(d, t) < parts) ++t;
    return t;
}

bool bisects(const AffineFunctional& h, const std::vector<Vector>& set) {
    std::size_t pos = 0, neg = 0, half = set.size() / 2;
    for (const auto& y : set) {
        int s = sign(h(y));
        if (s > 0 && ++pos > half) return false;
        if (s < 0 && ++neg > half) return false;
    }
    return true;
}

// ------------------------------------------------------------ ham sandwich

namespace {

struct Functional {
    Vector a;       // linear part on R^k
    Rational c;
};

// Deepest-first order: sum over a few coordinate directions of the distance of
// a point's rank from either end.
std::vector<std::size_t> depth_order(const std::vector<Vector>& set) {
    const std::size_t n = set.size();
    const std::size_t k = set.front().size();
    std::vector<long> score(n, 0);
    std::vector<std::size_t> idx(n);
    auto account = [&](auto&& key) {
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<Rational> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = key(set[i]);
        std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return vals[x] < vals[y]; });
        for (std::size_t r = 0; r < n; ++r)
            score[idx[r]] += static_cast<long>(std::min(r, n - 1 - r));
    };
    for (std::size_t j = 0; j < k; ++j) account([j](const Vector& y) { return y[j]; });
    account([](const Vector& y) {
        Rational s = 0;
        for (const auto& x : y) s += x;
        return s;
    });
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return score[x] > score[y]; });
    return idx;
}

bool counts_ok(const std::vector<std::size_t>& pos, const std::vector<std::size_t>& neg,
               const std::vector<std::size_t>& half) {
    for (std::size_t i = 0; i < half.size(); ++i)
        if (pos[i] > half[i] || neg[i] > half[i]) return false;
    return true;
}

Functional combine(const Functional& f0, const Functional& f1, const Rational& lambda) {
    Functional out{f0.a, f0.c + lambda * f1.c};
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += lambda * f1.a[i];
    return out;
}

// Sweeps the pencil f0 + lambda f1 (lambda in R, plus f1 itself) for a member
// that bisects every set.
std::optional<Functional> sweep_pencil(const Functional& f0, const Functional& f1,
                                       const std::vector<std::vector<Vector>>& sets) {
    const std::size_t k = sets.size();
    std::vector<std::size_t> half(k), pos(k, 0), neg(k, 0);
    for (std::size_t i = 0; i < k; ++i) half[i] = sets[i].size() / 2;

    struct Event {
        Rational lambda;
        std::size_t set;
        int after;  // sign once lambda passes the event
    };
    std::vector<Event> events;
    std::vector<std::size_t> pos_inf(k, 0), neg_inf(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (const auto& y : sets[i]) {
            Rational a = dot(f0.a, y) + f0.c;
            Rational b = dot(f1.a, y) + f1.c;
            int sb = sign(b);
            // f1 alone.
            if (sb > 0) ++pos_inf[i];
            else if (sb < 0) ++neg_inf[i];
            if (sb == 0) {
                int sa = sign(a);
                if (sa > 0) ++pos[i];
                else if (sa < 0) ++neg[i];
                continue;
            }
            (sb > 0 ? neg[i] : pos[i]) += 1;
            events.push_back({-a / b, i, sb});
        }
    if (counts_ok(pos_inf, neg_inf, half)) return f1;
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) { return x.lambda < y.lambda; });
    if (counts_ok(pos, neg, half))
        return combine(f0, f1, events.empty() ? Rational(0) : Rational(events.front().lambda - 1));
    for (std::size_t g = 0; g < events.size();) {
        std::size_t e = g;
        while (e < events.size() && events[e].lambda == events[g].lambda) ++e;
        for (std::size_t i = g; i < e; ++i) (events[i].after > 0 ? neg : pos)[events[i].set] -= 1;
        if (counts_ok(pos, neg, half)) return combine(f0, f1, events[g].lambda);
        for (std::size_t i = g; i < e; ++i) (events[i].after > 0 ? pos : neg)[events[i].set] += 1;
        if (counts_ok(pos, neg, half)) {
            Rational next = e < events.size() ? Rational((events[g].lambda + events[e].lambda) / 2)
                                              : Rational(events[g].lambda + 1);
            return combine(f0, f1, next);
        }
        g = e;
    }
    return std::nullopt;
}

// Calls visit(tuple) for index tuples in shells of increasing maximum index.
template <class Visit>
bool for_each_shell_tuple(const std::vector<std::size_t>& sizes, Visit&& visit, std::size_t budget) {
    const std::size_t arity = sizes.size();
    const std::size_t longest = *std::max_element(sizes.begin(), sizes.end());
    std::vector<std::size_t> tuple(arity);
    std::size_t visited = 0;
    for (std::size_t shell = 0; shell < longest; ++shell) {
        // Odometer over indices < min(shell + 1, size), keeping tuples that touch the shell.
        std::vector<std::size_t> limit(arity);
        for (std::size_t i = 0; i < arity; ++i) limit[i] = std::min(shell + 1, sizes[i]);
        std::fill(tuple.begin(), tuple.end(), 0);
        for (;;) {
            bool touches = std::any_of(tuple.begin(), tuple.end(), [&](std::size_t x) { return x == shell; });
            if (touches) {
                if (visit(tuple)) return true;
                if (++visited >= budget) return false;
            }
            std::size_t pos = 0;
            while (pos < arity && ++tuple[pos] == limit[pos]) tuple[pos++] = 0;
            if (pos == arity) break;
        }
    }
    return false;
}

std::optional<Functional> cut_in_k_dims(const std::vector<std::vector<Vector>>& sets, std::size_t budget) {
    const std::size_t k = sets.size();
    if (k == 1) {
        std::vector<Rational> vals;
        for (const auto& y : sets[0]) vals.push_back(y[0]);
        std::sort(vals.begin(), vals.end());
        Rational median = vals[(vals.size() - 1) / 2];
        return Functional{Vector{Rational(1)}, -median};
    }
    // Largest set is swept, not enumerated.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sets[x].size() < sets[y].size(); });
    std::vector<std::vector<std::size_t>> depth(k - 1);
    std::vector<std::size_t> sizes(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) {
        depth[i] = depth_order(sets[order[i]]);
        sizes[i] = sets[order[i]].size();
    }
    std::optional<Functional> found;
    for_each_shell_tuple(
        sizes,
        [&](const std::vector<std::size_t>& tuple) {
            Matrix m(0, k + 1);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                Vector row(sets[order[i]][depth[i][tuple[i]]]);
                row.push_back(1);
                m.append_row(row);
            }
            auto null = nullspace(m);
            if (null.size() != 2) return false;
            auto to_functional = [k](const Vector& v) {
                return Functional{Vector(v.begin(), v.begin() + static_cast<long>(k)), v[k]};
            };
            found = sweep_pencil(to_functional(null[0]), to_functional(null[1]), sets);
            return found.has_value();
        },
        budget);
    return found;
}

// Rows of a k x D projection. Attempt 0 with k == D is the identity.
std::vector<Vector> projection(std::size_t k, std::size_t D, unsigned attempt) {
    std::vector<Vector> rows(k, Vector(D));
    if (attempt == 0 && k == D) {
        for (std::size_t i = 0; i < k; ++i) rows[i][i] = 1;
        return rows;
    }
    Rng rng = Rng(0x68616d73ULL).split(attempt * 1000003ULL + k * 131ULL + D);
    for (auto& r : rows)
        for (auto& x : r) x = rng.uniform(-9, 9);
    return rows;
}

// Pivoting walk. Hyperplanes through one pinned point of each of the first
// k - 1 sets (all of odd size) bisect those sets exactly. Rotating about the
// pins, a point of set i crossing becomes the new pin of set i and the old pin
// is released to the side the new one came from. The last set is watched for
// balance along the way. The walk starts from a vertical cut found
// recursively on the first k - 1 coordinates.

struct PinnedCut {
    Vector h;                       // coefficients on the first k coordinates, then the constant
    std::vector<std::size_t> pins;  // one point of each set on the hyperplane
};

Rational hval(const Vector& h, const Vector& y) {
    const std::size_t k = h.size() - 1;
    Rational s = h[k];
    for (std::size_t i = 0; i < k; ++i) s += h[i] * y[i];
    return s;
}

// Positive rescaling to a primitive integer vector.
void make_primitive(Vector& v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g != 0)
        for (auto& x : v) x /= g;
}

// Direction of the pencil parameter, compared by angle in (0, pi].
struct Dir {
    Rational x, y;
};

bool angle_less(const Dir& p, const Dir& q) {
    if (sign(q.y) == 0) return sign(p.y) != 0;
    if (sign(p.y) == 0) return false;
    return sign(p.x * q.y - p.y * q.x) > 0;
}

bool angle_equal(const Dir& p, const Dir& q) { return !angle_less(p, q) && !angle_less(q, p); }

using Accept = std::function<bool(const PinnedCut&)>;
using SeenStates = std::set<std::vector<std::size_t>>;

// Walks from h through the pins, reporting each cut that also bisects the last
// set, until accept takes one (true) or the walk closes up or stalls (false).
// States in seen were walked before, by this call or an earlier one.
bool follow(const std::vector<std::vector<Vector>>& sets, Vector h, std::vector<std::size_t> pins,
            std::size_t& pivots_left, SeenStates& seen, const Accept& accept) {
    const std::size_t k = sets.size();
    const std::size_t last = k - 1;
    std::vector<std::size_t> half(k);
    for (std::size_t i = 0; i < k; ++i) half[i] = sets[i].size() / 2;

    struct Event {
        Dir dir;
        std::size_t set, idx;
        int before;
    };
    std::size_t released_set = 0, released_idx = 0;
    int want = 1;
    bool first = true;
    while (pivots_left > 0) {
        --pivots_left;
        Matrix a(0, k + 1);
        for (std::size_t i = 0; i < last; ++i) {
            Vector row(sets[i][pins[i]].begin(), sets[i][pins[i]].begin() + static_cast<long>(k));
            row.push_back(1);
            a.append_row(row);
        }
        auto null = nullspace(a);
        if (null.size() != 2) return false;
        Vector v;
        for (const auto& cand : null)
            if (rank(Matrix::from_rows({h, cand}, k + 1)) == 2) {
                v = cand;
                break;
            }
        if (v.empty()) return false;
        int s = first ? 1 : sign(hval(v, sets[released_set][released_idx]));
        if (s == 0) return false;
        if (s != want)
            for (auto& x : v) x = -x;
        make_primitive(v);

        std::vector<std::size_t> pos(k, 0), neg(k, 0), pos_h(k, 0), neg_h(k, 0);
        std::vector<Event> events;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < sets[i].size(); ++j) {
                if (i < last && j == pins[i]) continue;
                Rational av = hval(h, sets[i][j]);
                Rational bv = hval(v, sets[i][j]);
                int sa = sign(av), sb = sign(bv);
                if (sa == 0 && sb == 0) {
                    if (i < last) return false;
                    continue;
                }
                if (sa > 0) ++pos_h[i];
                if (sa < 0) ++neg_h[i];
                int side = sa != 0 ? sa : sb;
                (side > 0 ? pos : neg)[i] += 1;
                Dir d = sa > 0 ? Dir{-bv, av} : (sa < 0 ? Dir{bv, -av} : Dir{Rational(-1), Rational(0)});
                events.push_back({std::move(d), i, j, side});
            }
        for (std::size_t i = 0; i < last; ++i)
            if (pos[i] != neg[i]) return false;
        auto pinned_on = [&](const Vector& g) -> std::optional<PinnedCut> {
            for (std::size_t j = 0; j < sets[last].size(); ++j)
                if (sign(hval(g, sets[last][j])) == 0) {
                    PinnedCut out{g, pins};
                    out.pins.push_back(j);
                    return out;
                }
            return std::nullopt;
        };
        if (first && counts_ok(pos_h, neg_h, half))
            if (auto out = pinned_on(h); out && accept(*out)) return true;

        // The first pinned-set crossing ends this pencil.
        std::optional<Dir> stop;
        for (const auto& e : events)
            if (e.set < last && (!stop || angle_less(e.dir, *stop))) stop = e.dir;
        std::vector<Event> due;
        for (auto& e : events)
            if (!stop || !angle_less(*stop, e.dir)) due.push_back(std::move(e));
        std::sort(due.begin(), due.end(), [](const Event& x, const Event& y) { return angle_less(x.dir, y.dir); });

        bool pivoted = false;
        for (std::size_t g = 0; g < due.size() && !pivoted;) {
            std::size_t e = g;
            while (e < due.size() && angle_equal(due[e].dir, due[g].dir)) ++e;
            for (std::size_t i = g; i < e; ++i) (due[i].before > 0 ? pos : neg)[due[i].set] -= 1;
            Vector at(k + 1);
            for (std::size_t i = 0; i <= k; ++i) at[i] = due[g].dir.x * h[i] + due[g].dir.y * v[i];
            if (counts_ok(pos, neg, half))
                if (auto out = pinned_on(at); out && accept(*out)) return true;
            std::size_t crossing = due.size();
            for (std::size_t i = g; i < e; ++i)
                if (due[i].set < last) {
                    if (crossing != due.size()) return false;
                    crossing = i;
                }
            if (crossing != due.size()) {
                const Event& q = due[crossing];
                released_set = q.set;
                released_idx = pins[q.set];
                want = q.before;
                pins[q.set] = q.idx;
                std::vector<std::size_t> key(pins);
                key.push_back(released_set);
                key.push_back(released_idx);
                if (!seen.insert(key).second) return false;
                h = std::move(at);
                make_primitive(h);
                pivoted = true;
            } else {
                for (std::size_t i = g; i < e; ++i) (due[i].before > 0 ? neg : pos)[due[i].set] += 1;
            }
            g = e;
        }
        if (!pivoted) return false;
        first = false;
    }
    return false;
}

bool walk_cut(const std::vector<std::vector<Vector>>& sets, std::size_t& pivots_left, const Accept& accept) {
    const std::size_t k = sets.size();
    if (k == 1) {
        std::vector<std::size_t> idx(sets[0].size());
        std::iota(idx.begin(), idx.end(), 0);
        auto mid = idx.begin() + static_cast<long>(idx.size() / 2);
        std::nth_element(idx.begin(), mid, idx.end(),
                         [&](std::size_t x, std::size_t y) { return sets[0][x][0] < sets[0][y][0]; });
        return accept(PinnedCut{Vector{Rational(1), Rational(-sets[0][*mid][0])}, {*mid}});
    }
    // Each cut of the first k - 1 sets is a vertical start here. A start on a
    // loop that never reaches its mirror image fails; the next one is tried.
    std::vector<std::vector<Vector>> head(sets.begin(), sets.end() - 1);
    SeenStates seen;
    return walk_cut(head, pivots_left, [&](const PinnedCut& sub) {
        Vector h(k + 1);
        for (std::size_t i = 0; i + 1 < k; ++i) h[i] = sub.h[i];
        h[k] = sub.h[k - 1];
        return follow(sets, std::move(h), sub.pins, pivots_left, seen, accept);
    });
}

// Walk on randomly mixed coordinates. Even sets drop one point: an exact
// bisector of the rest still bisects the whole set.
std::optional<Functional> walk_in_k_dims(const std::vector<std::vector<Vector>>& sets, std::uint64_t seed) {
    const std::size_t k = sets.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sets[x].size() < sets[y].size(); });
    for (unsigned attempt = 0; attempt < 12; ++attempt) {
        Rng rng = Rng(seed).split(attempt);
        std::vector<Vector> mix(k, Vector(k));
        for (auto& row : mix)
            for (auto& x : row) x = rng.uniform(-9, 9);
        if (rank(Matrix::from_rows(mix, k)) != k) continue;
        std::vector<std::vector<Vector>> mixed(k);
        for (std::size_t i = 0; i < k; ++i) {
            const auto& src = sets[order[i]];
            std::size_t keep = src.size() % 2 == 0 ? src.size() - 1 : src.size();
            for (std::size_t j = 0; j < keep; ++j) {
                Vector z(k);
                for (std::size_t r = 0; r < k; ++r) z[r] = dot(mix[r], src[j]);
                mixed[i].push_back(std::move(z));
            }
        }
        std::size_t pivots = 20000;
        std::optional<Functional> found;
        walk_cut(mixed, pivots, [&](const PinnedCut& cut) {
            Functional f{Vector(k), cut.h[k]};
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t j = 0; j < k; ++j) f.a[j] += cut.h[r] * mix[r][j];
            AffineFunctional check{f.a, f.c};
            if (!std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return bisects(check, s); })) return false;
            found = std::move(f);
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

}  // namespace

AffineFunctional ham_sandwich_cut(const std::vector<std::vector<Vector>>& sets, std::size_t D) {
    std::vector<const std::vector<Vector>*> live;
    for (const auto& s : sets) {
        for (const auto& y : s)
            if (y.size() != D) throw DimensionMismatch("ham_sandwich_cut: point not in R^D");
        if (!s.empty()) live.push_back(&s);
    }
    const std::size_t k = live.size();
    if (k > D) throw PreconditionError("ham_sandwich_cut: more nonempty sets than dimensions");
    if (k == 0) {
        Vector c(D);
        c[0] = 1;
        return {c, Rational(0)};
    }
    std::size_t total = 0;
    for (auto* s : live) total += s->size();
    const std::size_t budget = std::max<std::size_t>(20000, 4000000 / std::max<std::size_t>(total, 1));
    const unsigned attempts = k == D ? 1 : 6;
    auto project = [&](const std::vector<Vector>& proj) {
        std::vector<std::vector<Vector>> projected(k);
        for (std::size_t i = 0; i < k; ++i)
            for (const auto& y : *live[i]) {
                Vector z(k);
                for (std::size_t r = 0; r < k; ++r) z[r] = dot(proj[r], y);
                projected[i].push_back(std::move(z));
            }
        return projected;
    };
    auto lift_back = [&](const Functional& f, const std::vector<Vector>& proj) {
        AffineFunctional h{Vector(D), f.c};
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t j = 0; j < D; ++j) h.coeffs[j] += f.a[r] * proj[r][j];
        return h;
    };
    // The walk is fast but can circle; the exhaustive search copes with
    // degenerate input.
    for (int exhaustive = 0; exhaustive < 2; ++exhaustive)
        for (unsigned attempt = 0; attempt < attempts; ++attempt) {
            auto proj = projection(k, D, attempt);
            if (rank(Matrix::from_rows(proj, D)) != k) continue;
            auto projected = project(proj);
            auto f = exhaustive ? cut_in_k_dims(projected, budget) : walk_in_k_dims(projected, 0x77616c6bULL + attempt);
            if (f) return lift_back(*f, proj);
        }
    std::ostringstream os;
    os << "no bisecting hyperplane found for " << k << " sets in R^" << D;
    throw CutNotFound(os.str());
}

// ---------------------------------------------------------------- partition

namespace {

MultiPoly factor_from_cut(const AffineFunctional& h, std::size_t d, unsigned t) {
    auto monos = monomials(d, 1, t);
    MultiPoly f = MultiPoly::constant(d, h.constant);
    for (std::size_t i = 0; i < monos.size(); ++i) f.add_term(monos[i], h.coeffs[i]);
    return f.primitive();
}

}  // namespace

PartitionPoly build_partition(const PointSet& points, int m) {
    if (m < 1) throw PreconditionError("build_partition: m must be >= 1");
    if (points.empty()) throw PreconditionError("build_partition: empty point set");
    const std::size_t d = points.front().dim();

    PartitionPoly pp;
    pp.target_degree = m;
    std::vector<std::vector<std::size_t>> parts(1);
    parts[0].resize(points.size());
    std::iota(parts[0].begin(), parts[0].end(), 0);
    int planned = 0;
    for (std::size_t j = 1;; ++j) {
        const std::size_t part_count = std::size_t{1} << (j - 1);
        const unsigned t = lift_degree_for(d, part_count);
        if (planned + static_cast<int>(t) > m) break;
        bool any = std::any_of(parts.begin(), parts.end(), [](const auto& p) { return !p.empty(); });
        if (!any) break;

        std::vector<std::vector<Vector>> lifted(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto idx : parts[i]) lifted[i].push_back(veronese_lift(points[idx], t).coords);
        AffineFunctional h = ham_sandwich_cut(lifted, lift_dimension(d, t));
        MultiPoly f = factor_from_cut(h, d, t);

        std::vector<std::vector<std::size_t>> next;
        next.reserve(parts.size() * 2);
        for (const auto& part : parts) {
            std::vector<std::size_t> pos, neg;
            for (auto idx : part) {
                int s = sign(f.eval(points[idx]));
                if (s > 0) pos.push_back(idx);
                else if (s < 0) neg.push_back(idx);
            }
            next.push_back(std::move(pos));
            next.push_back(std::move(neg));
        }
        parts = std::move(next);
        planned += static_cast<int>(t);
        pp.product_degree += f.degree();
        pp.lift_degrees.push_back(t);
        pp.factors.push_back(std::move(f));
    }
    return pp;
}

CellMap assign_cells(const PointSet& points, const PartitionPoly& pp) {
    CellMap cm;
    for (const auto& p : points) {
        SignVector s = pp.signs(p);
        if (std::find(s.begin(), s.end(), 0) != s.end()) cm.boundary.push_back(p);
        else cm.cells[s].push_back(p);
    }
    return cm;
}

CrossingProfile crossing_profile(const Line& l, const PartitionPoly& pp, const PointSet& points) {
    CrossingProfile cp;
    cp.line = l;
    UniPoly u = pp.product().restrict_to_line(l);
    if (u.is_zero()) {
        cp.contained = true;
        return cp;
    }
    std::vector<Rational> samples;
    if (u.degree() == 0) {
        samples.push_back(0);
    } else {
        Rational b = cauchy_bound(u);
        auto roots = isolate_roots(u, -b, b);
        if (roots.empty()) samples.push_back(0);
        else {
            samples.push_back(roots.front().lo);
            for (const auto& iv : roots) samples.push_back(iv.hi);
        }
    }
    std::set<SignVector> realized;
    for (const auto& t : samples) realized.insert(pp.signs(l.at(t)));
    cp.intervals = static_cast<int>(samples.size());
    cp.cells_touched = static_cast<int>(realized.size());
    for (const auto& p : points) {
        if (!incident(p, l)) continue;
        SignVector s = pp.signs(p);
        if (std::find(s.begin(), s.end(), 0) == s.end()) ++cp.points_per_cell[s];
    }
    return cp;
}

std::optional<std::string> check_halving(const PointSet& points, const PartitionPoly& pp) {
    std::vector<PointSet> parts{points};
    for (std::size_t j = 0; j < pp.factors.size(); ++j) {
        std::vector<PointSet> next;
        for (const auto& part : parts) {
            PointSet pos, neg;
            for (const auto& p : part) {
                int s = sign(pp.factors[j].eval(p));
                if (s > 0) pos.push_back(p);
                else if (s < 0) neg.push_back(p);
            }
            if (pos.size() > part.size() / 2 || neg.size() > part.size() / 2) {
                std::ostringstream os;
                os << "factor " << j + 1 << " splits a part of " << part.size() << " points into "
                   << pos.size() << " positive / " << neg.size() << " negative";
                return os.str();
            }
            next.push_back(std::move(pos));
            next.push_back(std::move(neg));
        }
        parts = std::move(next);
    }
    return std::nullopt;
}

std::optional<int> pipeline_degree(int r) {
    if (r <= 8) return std::nullopt;
    int m = (r - 1) / 4;  // largest integer with 4m < r
    if (8 * m <= r) return std::nullopt;
    return m;
}

}  // namespace richlines
