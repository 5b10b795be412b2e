#include "richlines/polynomial.hpp"

#include "richlines/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace richlines {

unsigned total_degree(const Exponent& e) {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace {

void fill_degree(std::size_t dim, unsigned degree, std::size_t var, Exponent& cur, std::vector<Exponent>& out) {
    if (var + 1 == dim) {
        cur[var] = degree;
        out.push_back(cur);
        return;
    }
    for (unsigned k = degree + 1; k-- > 0;) {
        cur[var] = k;
        fill_degree(dim, degree - k, var + 1, cur, out);
    }
}

Integer content_lcm(const Vector& coeffs, Integer& gcd_num) {
    Integer lcm = 1;
    gcd_num = 0;
    for (const auto& c : coeffs) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
    }
    return lcm;
}

}  // namespace

std::vector<Exponent> monomials(std::size_t dim, unsigned min_degree, unsigned max_degree) {
    std::vector<Exponent> out;
    if (dim == 0) return out;
    Exponent cur(dim, 0);
    for (unsigned deg = min_degree; deg <= max_degree; ++deg) fill_degree(dim, deg, 0, cur, out);
    return out;
}

Rational monomial_value(const Exponent& e, const Point& p) {
    Rational v = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (unsigned k = 0; k < e[i]; ++k) v *= p[i];
    return v;
}

// ---------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(std::size_t dim, const Rational& c) {
    MultiPoly f(dim);
    f.add_term(Exponent(dim, 0), c);
    return f;
}

MultiPoly MultiPoly::variable(std::size_t dim, std::size_t index) {
    MultiPoly f(dim);
    Exponent e(dim, 0);
    e[index] = 1;
    f.add_term(e, 1);
    return f;
}

MultiPoly MultiPoly::affine(const Vector& a, const Rational& c) {
    MultiPoly f = constant(a.size(), c);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Exponent e(a.size(), 0);
        e[i] = 1;
        f.add_term(e, a[i]);
    }
    return f;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    assert(e.size() == dim_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (dim_ == 0) dim_ = o.dim_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out(std::max(a.dim_, b.dim_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(ea);
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Rational MultiPoly::eval(const Point& p) const {
    if (p.dim() != dim_) throw DimensionMismatch("MultiPoly::eval: dimension mismatch");
    // Powers are cached per variable up to the largest exponent seen.
    std::vector<std::vector<Rational>> powers(dim_, std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < dim_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * p[i]);
            if (e[i]) term *= pw[e[i]];
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
    MultiPoly out(dim_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d(e);
        --d[var];
        out.add_term(d, c * e[var]);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::gradient() const {
    std::vector<MultiPoly> g;
    g.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) g.push_back(partial(i));
    return g;
}

UniPoly MultiPoly::restrict_to_line(const Line& l) const {
    if (l.dim() != dim_) throw DimensionMismatch("restrict_to_line: dimension mismatch");
    std::vector<std::vector<UniPoly>> powers(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        powers[i].push_back(UniPoly{Rational(1)});
    UniPoly out;
    for (const auto& [e, c] : terms_) {
        UniPoly term{c};
        for (std::size_t i = 0; i < dim_; ++i) {
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * UniPoly{l.base[i], Rational(l.direction[i])});
            if (e[i]) term = term * pw[e[i]];
        }
        out += term;
    }
    return out;
}

MultiPoly MultiPoly::primitive() const {
    if (terms_.empty()) return *this;
    Vector cs;
    cs.reserve(terms_.size());
    for (const auto& [e, c] : terms_) cs.push_back(c);
    Integer g;
    Integer l = content_lcm(cs, g);
    Rational scale(l, g);
    scale.canonicalize();
    MultiPoly out(*this);
    out *= scale;
    return out;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names3[] = {"x", "y", "z"};
    auto var = [&](std::size_t i) {
        return dim_ <= 3 ? std::string(names3[i]) : "x" + std::to_string(i + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool is_const = total_degree(e) == 0;
        if (mag != 1 || is_const) {
            os << richlines::to_string(mag);
            if (!is_const) os << '*';
        }
        bool first_var = true;
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!e[i]) continue;
            if (!first_var) os << '*';
            first_var = false;
            os << var(i);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

// ------------------------------------------------------------------ UniPoly

UniPoly::UniPoly(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    Vector v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    Vector d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::primitive() const {
    if (c_.empty()) return {};
    Integer g;
    Integer l = content_lcm(c_, g);
    Rational scale(l, g);
    scale.canonicalize();
    return *this * scale;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Vector out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out));
}

UniPoly operator*(UniPoly a, const Rational& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    r = a;
    if (a.degree() < b.degree()) {
        q = {};
        return;
    }
    Vector qc(a.degree() - b.degree() + 1);
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        Rational f = r.lead() / b.lead();
        qc[shift] = f;
        for (int i = 0; i <= db; ++i) r.c_[i + shift] -= f * b.c_[i];
        r.trim();
    }
    q = UniPoly(std::move(qc));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.primitive();
    }
    if (a.is_zero()) return a;
    return a * (1 / Rational(a.lead()));
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (mag != 1 || i == 0) os << richlines::to_string(mag) << (i ? "*" : "");
        if (i) os << 't';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

// ------------------------------------------------------------ Sturm / roots

UniPoly squarefree_part(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("squarefree_part of the zero polynomial");
    UniPoly g = UniPoly::gcd(u, u.derivative());
    UniPoly q, r;
    UniPoly::divmod(u, g, q, r);
    return q.primitive();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& u) {
    std::vector<UniPoly> seq;
    seq.push_back(squarefree_part(u));
    UniPoly d = seq.front().derivative();
    if (d.is_zero()) return seq;
    seq.push_back(d.primitive());
    for (;;) {
        UniPoly q, r;
        UniPoly::divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back((r * Rational(-1)).primitive());
    }
    return seq;
}

namespace {

int sign_changes(const std::vector<UniPoly>& seq, const Rational& x) {
    int changes = 0, prev = 0;
    for (const auto& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// A point strictly inside (a, b) at which u does not vanish.
Rational split_point(const UniPoly& u, const Rational& a, const Rational& b) {
    Rational mid = (a + b) / 2;
    if (u.sign_at(mid) != 0) return mid;
    for (unsigned long den = 3;; ++den)
        for (unsigned long num = 1; num < den; ++num) {
            Rational frac(num, den);
            frac.canonicalize();
            Rational x = a + (b - a) * frac;
            if (u.sign_at(x) != 0) return x;
        }
}

}  // namespace

int sturm_count(const UniPoly& u, const Rational& a, const Rational& b) {
    if (u.is_zero()) throw ZeroPolynomial("sturm_count of the zero polynomial");
    if (!(a < b)) throw PreconditionError("sturm_count: need a < b");
    if (u.sign_at(a) == 0 || u.sign_at(b) == 0)
        throw EndpointRoot("sturm_count: root at interval endpoint");
    auto seq = sturm_sequence(u);
    return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational cauchy_bound(const UniPoly& u) {
    if (u.is_zero()) throw ZeroPolynomial("cauchy_bound of the zero polynomial");
    Rational m = 0;
    for (int i = 0; i < u.degree(); ++i) m = std::max(m, Rational(abs(u.coeffs()[i])));
    return 1 + m / abs(u.lead());
}

std::vector<RootInterval> isolate_roots(const UniPoly& u, const Rational& lo, const Rational& hi) {
    if (u.is_zero()) throw ZeroPolynomial("isolate_roots of the zero polynomial");
    if (!(lo < hi)) throw PreconditionError("isolate_roots: need lo < hi");
    if (u.sign_at(lo) == 0 || u.sign_at(hi) == 0)
        throw EndpointRoot("isolate_roots: root at interval endpoint");
    auto seq = sturm_sequence(u);
    std::vector<RootInterval> out;
    // Depth-first, left half first, so intervals come out sorted.
    struct Item {
        Rational a, b;
        int va, vb;
    };
    std::vector<Item> stack{{lo, hi, sign_changes(seq, lo), sign_changes(seq, hi)}};
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        int n = it.va - it.vb;
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({it.a, it.b});
            continue;
        }
        Rational m = split_point(u, it.a, it.b);
        int vm = sign_changes(seq, m);
        stack.push_back({m, it.b, vm, it.vb});
        stack.push_back({it.a, m, it.va, vm});
    }
    return out;
}

std::vector<int> sample_sign_sequence(const UniPoly& u, const Rational& bound) {
    auto roots = isolate_roots(u, -bound, bound);
    std::vector<int> signs{u.sign_at(-bound)};
    for (const auto& iv : roots) signs.push_back(u.sign_at(iv.hi));
    return signs;
}

}  // namespace richlines
