#pragma once

#include "opgraph/graded_graph.hpp"
#include "opgraph/tree.hpp"

#include <memory>
#include <vector>

namespace opgraph {

TreeComb up_free(const Tree& t);
TreeComb up_star_free(const Tree& t);
// Three-case recurrence.
TreeComb v_star_free(const Tree& t);
// Sum of contractions over quasi-maximal nodes.
TreeComb v_star_direct(const Tree& t);
TreeComb v_free(const Tree& t);

Int hook_closed_form(const Tree& t);
// Same value through the multinomial recurrence over root decompositions.
Int hook_recursive(const Tree& t);
Int twisted_hook(const Tree& t);

class OracleBoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Brute-force count over subsets of internal nodes.
Int linear_extensions(const Tree& t, bool twisted, int bound = 8);
// Explicit enumeration of the extensions as lists of addresses.
std::vector<std::vector<Address>> list_linear_extensions(const Tree& t, bool twisted, int bound = 8);

// theta[d][n] for 0 <= d <= d_max, 0 <= n <= 1 + (m - 1) d_max.
std::vector<std::vector<Int>> theta_table(const Alphabet& alphabet, int d_max);
std::vector<Int> theta_row_sums(const Alphabet& alphabet, int d_max);

Int phi_free(const Tree& t);
// |t| - #maximal nodes; singleton alphabets only.
Int phi_self_singleton(const Tree& t);

// Graphs on all trees over an alphabet, sharing one universe cache.
struct FreeGraphs {
    AlphabetPtr alphabet;
    std::shared_ptr<TreeUniverse> universe;
    GradedGraph<Tree> u;
    GradedGraph<Tree> v;

    GradedGraphPair<Tree> uv_pair() const { return {u, v}; }
    GradedGraphPair<Tree> uu_pair() const { return {u, u}; }
};

FreeGraphs make_free_graphs(const AlphabetPtr& alphabet);

// Copy of a graph whose adjoint is read off the lower slice.
GradedGraph<Tree> without_closed_adjoint(const GradedGraph<Tree>& g);

}  // namespace opgraph
