#ifndef CIRCDIAM_WALK_ENGINE_HPP
#define CIRCDIAM_WALK_ENGINE_HPP

// Breadth-first circuit-walk search on homogeneous integer coordinates.
//
// A point x is stored as (X_1, ..., X_n, D) with x = X / D, D > 0 and
// gcd(X, D) = 1, so equal points have equal keys. Inequality rows are scaled
// to integers once; the slack of row i at x is (A_i X - b_i D), which is D
// times the residual and has the same sign and the same ratio-test minimiser.
//
// Int is either __int128 (every operation overflow-checked, throws Overflow)
// or mpz_class.

#include "circdiam/circuits.hpp"
#include "circdiam/polyhedron.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace circdiam::detail {

struct Overflow {};

using i128 = __int128;

inline i128 mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline i128 add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline i128 sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int sign_of(i128 a) { return (a > 0) - (a < 0); }
inline i128 gcd_abs(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
inline i128 div_exact(i128 a, i128 b) { return a / b; }
inline std::size_t hash_of(i128 a) {
    auto u = static_cast<unsigned __int128>(a);
    return static_cast<std::size_t>(u) ^ (static_cast<std::size_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
}
inline mpz_class to_mpz(i128 a) {
    const bool neg = a < 0;
    auto u = neg ? static_cast<unsigned __int128>(-(a + 1)) + 1 : static_cast<unsigned __int128>(a);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}
inline i128 from_mpz(const mpz_class& z, i128) {
    // Entries of the input data; anything beyond 64 bits goes to the mpz path.
    if (!z.fits_slong_p()) throw Overflow{};
    return static_cast<i128>(z.get_si());
}

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline int sign_of(const mpz_class& a) { return sgn(a); }
inline mpz_class gcd_abs(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline mpz_class div_exact(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline std::size_t hash_of(const mpz_class& a) {
    return static_cast<std::size_t>(mpz_get_ui(a.get_mpz_t())) * 31 + static_cast<std::size_t>(mpz_size(a.get_mpz_t())) +
           (sgn(a) < 0 ? 0x5bd1e995u : 0u);
}
inline mpz_class to_mpz(const mpz_class& a) { return a; }
inline mpz_class from_mpz(const mpz_class& z, const mpz_class&) { return z; }

// Target of a search: a vertex given by its key and its tight rows (0-based).
template <typename Int>
struct Target {
    std::vector<Int> key;
    std::vector<std::size_t> tight;
};

template <typename Int>
class WalkEngine {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    WalkEngine(const HPolyhedron& p, const CircuitSet& circuits)
        : n_(p.dim()), m_(p.num_inequalities()), index_(16, KeyHash{this}, KeyEq{this}) {
        a_.resize(m_ * n_);
        b_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            mpz_class den = 1;
            for (const auto& q : p.ineq_matrix().row(i)) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.ineq_rhs()[i].get_den_mpz_t());
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational& q = p.ineq_matrix()(i, j);
                a_[i * n_ + j] = from_mpz(mpz_class(q.get_num() * (den / q.get_den())), Int{});
            }
            const Rational& r = p.ineq_rhs()[i];
            b_[i] = from_mpz(mpz_class(r.get_num() * (den / r.get_den())), Int{});
        }
        const auto& dirs = circuits.signed_directions();
        dirs_.resize(dirs.size() * n_);
        images_.resize(dirs.size() * m_);
        for (std::size_t c = 0; c < dirs.size(); ++c) {
            std::vector<Int> g(n_);
            for (std::size_t j = 0; j < n_; ++j) g[j] = dirs_[c * n_ + j] = from_mpz(dirs[c][j], Int{});
            for (std::size_t i = 0; i < m_; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < n_; ++j) acc = add(acc, mul(a_[i * n_ + j], g[j]));
                images_[c * m_ + i] = acc;
            }
            direction_index_.emplace(g, static_cast<std::uint32_t>(c));
        }
        num_dirs_ = dirs.size();
    }

    std::size_t dim() const { return n_; }
    std::size_t num_points() const { return parent_.size(); }
    std::size_t num_layers() const { return layer_begin_.size(); }
    std::size_t layer_begin(std::size_t d) const { return layer_begin_[d]; }
    std::size_t layer_end(std::size_t d) const {
        return d + 1 < layer_begin_.size() ? layer_begin_[d + 1] : parent_.size();
    }
    std::uint32_t parent(std::size_t idx) const { return parent_[idx]; }
    std::uint32_t via(std::size_t idx) const { return via_[idx]; }
    std::span<const Int> key(std::size_t idx) const { return {coords_.data() + idx * (n_ + 1), n_ + 1}; }

    std::vector<Int> make_key(const QVector& x) const {
        mpz_class den = 1;
        for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        std::vector<Int> key(n_ + 1);
        for (std::size_t j = 0; j < n_; ++j)
            key[j] = from_mpz(mpz_class(x[j].get_num() * (den / x[j].get_den())), Int{});
        key[n_] = from_mpz(den, Int{});
        return key;
    }

    QVector to_point(std::span<const Int> key) const {
        QVector x(n_);
        const mpz_class den = to_mpz(key[n_]);
        for (std::size_t j = 0; j < n_; ++j) {
            x[j] = Rational(to_mpz(key[j]), den);
            x[j].canonicalize();
        }
        return x;
    }

    Target<Int> make_target(const QVector& x, const FacetSet& tight) const {
        Target<Int> t{make_key(x), {}};
        for (int f : tight) t.tight.push_back(static_cast<std::size_t>(f - 1));
        return t;
    }

    void start(const QVector& source) {
        coords_.clear();
        parent_.clear();
        via_.clear();
        index_.clear();
        layer_begin_.assign(1, 0);
        auto key = make_key(source);
        insert(key, kNone, kNone);
    }

    // Appends the next layer. Returns its size.
    std::size_t expand() {
        const std::size_t begin = layer_begin(num_layers() - 1), end = parent_.size();
        layer_begin_.push_back(end);
        std::vector<Int> slack(m_), next(n_ + 1);
        for (std::size_t idx = begin; idx < end; ++idx) {
            compute_slack(idx, slack);
            for (std::size_t c = 0; c < num_dirs_; ++c) {
                if (step(idx, c, slack, next)) insert(next, static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(c));
            }
        }
        return parent_.size() - end;
    }

    // Maximal step from point idx along signed circuit c into `out`. False if
    // the step is blocked or unbounded.
    bool step(std::size_t idx, std::size_t c, const std::vector<Int>& slack, std::vector<Int>& out) const {
        const Int* img = images_.data() + c * m_;
        std::size_t best = m_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (sign_of(img[i]) >= 0) continue;
            if (sign_of(slack[i]) == 0) return false;
            // slack_i / -img_i < slack_best / -img_best
            if (best == m_ || mul(slack[i], img[best]) > mul(slack[best], img[i])) best = i;
        }
        if (best == m_) return false;
        const Int t = sub(Int(0), img[best]);
        const Int& s = slack[best];
        const Int* x = coords_.data() + idx * (n_ + 1);
        const Int* g = dirs_.data() + c * n_;
        Int common = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            out[j] = add(mul(t, x[j]), mul(s, g[j]));
            common = gcd_abs(common, out[j]);
        }
        out[n_] = mul(t, x[n_]);
        common = gcd_abs(common, out[n_]);
        if (common != 1)
            for (auto& v : out) v = div_exact(v, common);
        return true;
    }

    void compute_slack(std::size_t idx, std::vector<Int>& slack) const {
        const Int* x = coords_.data() + idx * (n_ + 1);
        for (std::size_t i = 0; i < m_; ++i) {
            Int acc = sub(Int(0), mul(b_[i], x[n_]));
            for (std::size_t j = 0; j < n_; ++j)
                if (sign_of(a_[i * n_ + j]) != 0) acc = add(acc, mul(a_[i * n_ + j], x[j]));
            slack[i] = acc;
        }
    }

    // Whether one maximal circuit step from point idx lands exactly on the
    // target; returns the signed circuit used. The target is feasible, so the
    // segment is feasible; the step is maximal iff some row that decreases
    // along the direction is tight at the target.
    std::optional<std::uint32_t> step_to(std::size_t idx, const Target<Int>& t, std::vector<Int>& diff) const {
        const Int* x = coords_.data() + idx * (n_ + 1);
        const Int& d = x[n_];
        const Int& e = t.key[n_];
        Int common = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            diff[j] = sub(mul(t.key[j], d), mul(x[j], e));
            common = gcd_abs(common, diff[j]);
        }
        if (sign_of(common) == 0) return std::nullopt;
        if (common != 1)
            for (std::size_t j = 0; j < n_; ++j) diff[j] = div_exact(diff[j], common);
        auto it = direction_index_.find(diff);
        if (it == direction_index_.end()) return std::nullopt;
        const Int* img = images_.data() + it->second * m_;
        for (auto i : t.tight)
            if (sign_of(img[i]) < 0) return it->second;
        return std::nullopt;
    }

    std::optional<std::size_t> find(const std::vector<Int>& key) const {
        probe_ = &key;
        auto it = index_.find(kProbe);
        probe_ = nullptr;
        if (it == index_.end()) return std::nullopt;
        return *it;
    }

    // Points from the source to idx, inclusive.
    std::vector<QVector> path_to(std::size_t idx) const {
        std::vector<QVector> path;
        for (std::uint32_t cur = static_cast<std::uint32_t>(idx); cur != kNone; cur = parent_[cur])
            path.push_back(to_point(key(cur)));
        return {path.rbegin(), path.rend()};
    }

private:
    static constexpr std::uint32_t kProbe = 0xfffffffeu;

    struct VecHash {
        std::size_t operator()(const std::vector<Int>& v) const {
            std::size_t h = 0;
            for (const auto& x : v) h = h * 1000003u ^ hash_of(x);
            return h;
        }
    };

    struct KeyHash {
        const WalkEngine* self;
        std::size_t operator()(std::uint32_t idx) const {
            std::size_t h = 0;
            for (const auto& x : self->view(idx)) h = h * 1000003u ^ hash_of(x);
            return h;
        }
    };
    struct KeyEq {
        const WalkEngine* self;
        bool operator()(std::uint32_t a, std::uint32_t b) const {
            auto va = self->view(a), vb = self->view(b);
            for (std::size_t j = 0; j < va.size(); ++j)
                if (va[j] != vb[j]) return false;
            return true;
        }
    };

    std::span<const Int> view(std::uint32_t idx) const {
        if (idx == kProbe) return {probe_->data(), probe_->size()};
        return key(idx);
    }

    void insert(std::span<const Int> k, std::uint32_t parent, std::uint32_t via) {
        if (parent_.size() >= kProbe) throw std::length_error("circuit walk search exceeded its point capacity");
        coords_.insert(coords_.end(), k.begin(), k.end());
        const auto idx = static_cast<std::uint32_t>(parent_.size());
        parent_.push_back(parent);
        via_.push_back(via);
        if (!index_.insert(idx).second) {
            coords_.resize(coords_.size() - k.size());
            parent_.pop_back();
            via_.pop_back();
        }
    }

    std::size_t n_, m_;
    std::size_t num_dirs_ = 0;
    std::vector<Int> a_, b_, dirs_, images_;
    std::unordered_map<std::vector<Int>, std::uint32_t, VecHash> direction_index_;

    std::vector<Int> coords_;
    std::vector<std::uint32_t> parent_, via_;
    std::vector<std::size_t> layer_begin_;
    mutable const std::vector<Int>* probe_ = nullptr;
    std::unordered_set<std::uint32_t, KeyHash, KeyEq> index_;
};

// Runs fn with a 128-bit engine and retries with GMP integers on overflow.
template <typename Fn>
auto with_engine(const HPolyhedron& p, const CircuitSet& circuits, Fn&& fn) {
    try {
        WalkEngine<i128> engine(p, circuits);
        return fn(engine);
    } catch (const Overflow&) {
        WalkEngine<mpz_class> engine(p, circuits);
        return fn(engine);
    }
}

}  // namespace circdiam::detail

#endif
