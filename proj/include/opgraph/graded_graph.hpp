#pragma once

#include "opgraph/poly.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

namespace opgraph {

enum class Exec { serial, parallel };

template <class E>
class AdjointCache;

// A graded graph on a combinatorial graded set given by its up operator.
template <class E>
struct GradedGraph {
    using Comb = Combination<E>;
    using Op = std::function<Comb(const E&)>;

    std::string name;
    E root;
    std::function<int(const E&)> rank;
    // Elements of a rank in canonical order; the reference must stay valid.
    std::function<const std::vector<E>&(int)> universe;
    Op up;
    // Optional closed-form adjoint; when empty the adjoint is read off the lower slice.
    Op down;
    std::shared_ptr<AdjointCache<E>> cache = std::make_shared<AdjointCache<E>>();
};

template <class E>
struct GradedGraphPair {
    GradedGraph<E> u;
    GradedGraph<E> v;
};

// Reverse edges of each rank, filled once per rank.
template <class E>
class AdjointCache {
public:
    using Comb = Combination<E>;
    using Map = std::unordered_map<E, Comb, typename ElementTraits<E>::Hash>;

    // Predecessor map for elements of rank r.
    const Map& rank_map(const GradedGraph<E>& g, int r) {
        std::lock_guard lock(mu_);
        if (static_cast<int>(maps_.size()) <= r) maps_.resize(static_cast<std::size_t>(r) + 1);
        auto& slot = maps_[static_cast<std::size_t>(r)];
        if (!slot) {
            auto m = std::make_unique<Map>();
            if (r > 0)
                for (const auto& y : g.universe(r - 1))
                    for (const auto& [x, c] : g.up(y).map()) (*m)[x].add(y, c);
            slot = std::move(m);
        }
        return *slot;
    }

private:
    std::mutex mu_;
    std::vector<std::unique_ptr<Map>> maps_;
};

// Adjoint computed from the lower slice, ignoring any closed form.
template <class E>
Combination<E> enumerated_adjoint(const GradedGraph<E>& g, const E& x) {
    int r = g.rank(x);
    if (r == 0) return {};
    const auto& m = g.cache->rank_map(g, r);
    auto it = m.find(x);
    return it == m.end() ? Combination<E>{} : it->second;
}

template <class E>
Combination<E> up_adjoint(const GradedGraph<E>& g, const E& x) {
    if (g.down) return g.down(x);
    return enumerated_adjoint(g, x);
}

// Warms the reverse-edge cache so parallel readers never build it.
template <class E>
void prepare_adjoint(const GradedGraph<E>& g, int max_rank) {
    if (g.down) return;
    for (int r = 1; r <= max_rank; ++r) g.cache->rank_map(g, r);
}

template <class E>
Combination<E> apply_up(const GradedGraph<E>& g, const Combination<E>& f) {
    return apply_linear(g.up, f);
}

template <class E>
Combination<E> apply_adjoint(const GradedGraph<E>& g, const Combination<E>& f) {
    return apply_linear([&](const E& x) { return up_adjoint(g, x); }, f);
}

template <class E>
Int path_weight_sum(const GradedGraph<E>& g, const E& x, const E& y) {
    int steps = g.rank(y) - g.rank(x);
    if (steps < 0) return 0;
    Combination<E> level(x);
    for (int k = 0; k < steps; ++k) level = apply_up(g, level);
    return level.coeff(y);
}

namespace serial {

// Forward propagation of path weights from the root.
template <class E>
Combination<E> hook_series_up_to(const GradedGraph<E>& g, int d) {
    Combination<E> h(g.root), level(g.root);
    for (int k = 1; k <= d; ++k) {
        level = apply_up(g, level);
        h += level;
    }
    return h;
}

}  // namespace serial

namespace parallel {

// Pulls h(x) = <adjoint(x), h> over each rank slice.
template <class E>
Combination<E> hook_series_up_to(const GradedGraph<E>& g, int d) {
    prepare_adjoint(g, d);
    Combination<E> h(g.root), prev(g.root);
    for (int k = 1; k <= d; ++k) {
        const auto& xs = g.universe(k);
        const long n = static_cast<long>(xs.size());
        std::vector<Int> vals(xs.size());
#pragma omp parallel for schedule(dynamic, 64)
        for (long i = 0; i < n; ++i) {
            Int s = 0;
            for (const auto& [y, c] : up_adjoint(g, xs[static_cast<std::size_t>(i)]).map()) s += c * prev.coeff(y);
            vals[static_cast<std::size_t>(i)] = s;
        }
        Combination<E> level;
        level.reserve(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) level.add(xs[i], vals[i]);
        h += level;
        prev = std::move(level);
    }
    return h;
}

}  // namespace parallel

template <class E>
Combination<E> hook_series_up_to(const GradedGraph<E>& g, int d, Exec exec = Exec::parallel) {
    return exec == Exec::serial ? serial::hook_series_up_to(g, d) : parallel::hook_series_up_to(g, d);
}

template <class E>
UPoly initial_paths_series(const GradedGraph<E>& g, int d, Exec exec = Exec::parallel) {
    UPoly p = trace(hook_series_up_to(g, d, exec), g.rank);
    if (p.coeffs.size() < static_cast<std::size_t>(d) + 1) p.coeffs.resize(static_cast<std::size_t>(d) + 1, Int(0));
    return p;
}

template <class E>
Combination<E> returning_hook_series(const GradedGraphPair<E>& pair, int d, Exec exec = Exec::parallel) {
    return hadamard(hook_series_up_to(pair.u, d, exec), hook_series_up_to(pair.v, d, exec));
}

// (V* U - U V*)(x)
template <class E>
Combination<E> duality_commutator(const GradedGraphPair<E>& pair, const E& x) {
    auto lhs = apply_adjoint(pair.v, pair.u.up(x));
    auto rhs = apply_up(pair.u, up_adjoint(pair.v, x));
    return lhs -= rhs;
}

template <class E>
struct DualityReport {
    bool ok = true;
    long checked = 0;
    std::optional<E> witness;
    Combination<E> commutator;
    Int expected = 0;
};

template <class E>
using PhiFn = std::function<Int(const E&)>;

namespace serial {

template <class E>
DualityReport<E> check_phi_diagonal(const GradedGraphPair<E>& pair, const PhiFn<E>& phi, int d) {
    DualityReport<E> rep;
    for (int r = 0; r <= d; ++r) {
        for (const auto& x : pair.u.universe(r)) {
            ++rep.checked;
            auto c = duality_commutator(pair, x);
            Int f = phi(x);
            if (!(c == Combination<E>(x, f))) {
                rep.ok = false;
                rep.witness = x;
                rep.commutator = std::move(c);
                rep.expected = f;
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace serial

namespace parallel {

template <class E>
DualityReport<E> check_phi_diagonal(const GradedGraphPair<E>& pair, const PhiFn<E>& phi, int d) {
    prepare_adjoint(pair.v, d + 1);
    DualityReport<E> rep;
    for (int r = 0; r <= d; ++r) {
        const auto& xs = pair.u.universe(r);
        const long n = static_cast<long>(xs.size());
        long first_bad = n;
#pragma omp parallel for schedule(dynamic, 32) reduction(min : first_bad)
        for (long i = 0; i < n; ++i) {
            const auto& x = xs[static_cast<std::size_t>(i)];
            if (!(duality_commutator(pair, x) == Combination<E>(x, phi(x)))) first_bad = std::min(first_bad, i);
        }
        if (first_bad < n) {
            const auto& x = xs[static_cast<std::size_t>(first_bad)];
            rep.checked += first_bad + 1;
            rep.ok = false;
            rep.witness = x;
            rep.commutator = duality_commutator(pair, x);
            rep.expected = phi(x);
            return rep;
        }
        rep.checked += n;
    }
    return rep;
}

}  // namespace parallel

template <class E>
DualityReport<E> check_phi_diagonal(const GradedGraphPair<E>& pair, const PhiFn<E>& phi, int d,
                                    Exec exec = Exec::parallel) {
    return exec == Exec::serial ? serial::check_phi_diagonal(pair, phi, d) : parallel::check_phi_diagonal(pair, phi, d);
}

template <class E>
struct PhiDiscovery {
    bool diagonal = true;
    std::vector<std::pair<E, Int>> table;
    std::optional<E> witness;
    Combination<E> commutator;
};

// Solves for phi when the commutator is diagonal; otherwise reports the first witness.
template <class E>
PhiDiscovery<E> discover_phi(const GradedGraphPair<E>& pair, int d) {
    PhiDiscovery<E> out;
    for (int r = 0; r <= d; ++r) {
        for (const auto& x : pair.u.universe(r)) {
            auto c = duality_commutator(pair, x);
            Int k = c.coeff(x);
            if (!(c == Combination<E>(x, k))) {
                out.diagonal = false;
                out.witness = x;
                out.commutator = std::move(c);
                return out;
            }
            out.table.push_back({x, k});
        }
    }
    return out;
}

template <class E>
struct IdentityReport {
    bool ok = true;
    std::optional<E> witness;
    Combination<E> lhs, rhs;
};

// V* U^n = U^n V* + sum_{k1 + k2 = n - 1} U^k1 phi U^k2
template <class E>
IdentityReport<E> check_iterated_identity(const GradedGraphPair<E>& pair, const PhiFn<E>& phi, int n,
                                          const std::vector<E>& sample) {
    auto up_pow = [&](Combination<E> f, int k) {
        for (int i = 0; i < k; ++i) f = apply_up(pair.u, f);
        return f;
    };
    auto apply_phi = [&](const Combination<E>& f) {
        Combination<E> out;
        for (const auto& [e, c] : f.map()) out.add(e, c * phi(e));
        return out;
    };
    IdentityReport<E> rep;
    for (const auto& x : sample) {
        Combination<E> base(x);
        auto lhs = apply_adjoint(pair.v, up_pow(base, n));
        auto rhs = up_pow(apply_adjoint(pair.v, base), n);
        for (int k1 = 0; k1 + 1 <= n; ++k1) rhs += up_pow(apply_phi(up_pow(base, n - 1 - k1)), k1);
        if (!(lhs == rhs)) {
            rep.ok = false;
            rep.witness = x;
            rep.lhs = std::move(lhs);
            rep.rhs = std::move(rhs);
            return rep;
        }
    }
    return rep;
}

struct StructureReport {
    bool graded = true;
    bool simple = true;
    bool rooted = true;
    std::string witness;
};

// Graded support, 0/1 weights, and reachability from the root up to rank d.
template <class E>
StructureReport check_structure(const GradedGraph<E>& g, int d) {
    StructureReport rep;
    for (int r = 0; r < d; ++r)
        for (const auto& x : g.universe(r))
            for (const auto& [y, c] : g.up(x).map()) {
                if (g.rank(y) != r + 1 && rep.graded) {
                    rep.graded = false;
                    rep.witness = ElementTraits<E>::render(x);
                }
                if (c != 1) rep.simple = false;
            }
    auto h = serial::hook_series_up_to(g, d);
    for (int r = 0; r <= d; ++r)
        for (const auto& x : g.universe(r))
            if (h.coeff(x) <= 0 && rep.rooted) {
                rep.rooted = false;
                if (rep.witness.empty()) rep.witness = ElementTraits<E>::render(x);
            }
    return rep;
}

template <class E>
std::string export_dot(const GradedGraph<E>& g, int lo, int hi) {
    std::ostringstream out;
    std::unordered_map<E, std::size_t, typename ElementTraits<E>::Hash> ids;
    out << "digraph \"" << g.name << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int r = lo; r <= hi; ++r) {
        out << "  subgraph cluster_rank_" << r << " {\n    label=\"rank " << r << "\";\n    rank=same;\n";
        for (const auto& x : g.universe(r)) {
            std::size_t id = ids.size();
            ids.emplace(x, id);
            out << "    n" << id << " [label=\"" << ElementTraits<E>::render(x) << "\"];\n";
        }
        out << "  }\n";
    }
    for (int r = lo; r < hi; ++r)
        for (const auto& x : g.universe(r))
            for (const auto& [y, c] : g.up(x).terms()) {
                out << "  n" << ids.at(x) << " -> n" << ids.at(y);
                if (c != 1) out << " [label=\"" << c.get_str() << "\"]";
                out << ";\n";
            }
    out << "}\n";
    return out.str();
}

template <class E>
nlohmann::json export_json(const GradedGraph<E>& g, int lo, int hi) {
    nlohmann::json nodes = nlohmann::json::array(), edges = nlohmann::json::array();
    for (int r = lo; r <= hi; ++r)
        for (const auto& x : g.universe(r)) nodes.push_back({{"id", ElementTraits<E>::render(x)}, {"rank", r}});
    for (int r = lo; r < hi; ++r)
        for (const auto& x : g.universe(r))
            for (const auto& [y, c] : g.up(x).terms()) {
                nlohmann::json w = c.fits_slong_p() ? nlohmann::json(c.get_si()) : nlohmann::json(c.get_str());
                edges.push_back({{"src", ElementTraits<E>::render(x)}, {"dst", ElementTraits<E>::render(y)}, {"w", w}});
            }
    return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace opgraph
