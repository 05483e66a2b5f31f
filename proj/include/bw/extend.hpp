#pragma once
#include <string>
#include <vector>

#include "bw/strings.hpp"

namespace bw {

/* One new source vertex, the arrows leaving it, and the relations tying
 * those arrows into the old quiver.  Every relation term must start
 * (application order) with a new arrow. */
struct ExtensionSpec {
  struct NewArrow {
    std::string label;
    std::string target;
  };
  std::string vertex;
  std::vector<NewArrow> arrows;
  std::vector<std::string> relations;
};

/* Statements split on ';' or newlines, '#' comments allowed:
 *   extend: vertex 9; arrow chi1: 9 -> 5; arrow chi2: 9 -> 6;
 *   rel: beta1.chi1 - beta2.chi2
 * The leading "extend:" tag is optional. */
ExtensionSpec parse_extension_spec(const std::string& text);

/* Append the new vertex, arrows, relations to a copy of `base`.  Errors when
 * the vertex or a label already exists, an arrow does not leave the new
 * vertex or targets it, or a relation term does not start with a new arrow. */
Presentation extend_presentation(const Presentation& base, const ExtensionSpec& spec);

struct ExtendResult {
  AlgPtr ext;
  /* Path-class dimensions of the old-vertex blocks are unchanged; this is
   * the desk-scale certificate that the new ideal meets the old path algebra
   * in the old ideal. */
  bool old_blocks_unchanged = false;
  std::vector<int> old_dims;
};

ExtendResult one_point_extend(AlgPtr A, const ExtensionSpec& spec);

/* View a module over an extension of `base` as a module over `base`.  The
 * base quiver must be a prefix of the module's quiver and the module must
 * vanish on the added vertices. */
RepPtr restrict_to_base(AlgPtr base, RepPtr M);

/* The H_n family over any algebra containing vertex 1 with arrows alpha,
 * beta1/2, gamma1/2 into a common hub: the quotient of
 *   P = L z + sum_i L x_i + sum_i L y_i
 * (generator types e_1; e_5 or e_6 by parity of i; e_7 or e_8) by
 *   U_n = L(alpha z - b_1 x_1 - g_1 y_1)
 *       + sum_{i<n} L(g_i y_i - b_{i+1} x_{i+1} - g_{i+1} y_{i+1}),
 * b_i, g_i the parity-matched beta/gamma arrow. */
RepPtr build_Hn(AlgPtr A, int n);
/* The same module as a graph: one slot per generator image, one dependency
 * group per U_n generator. */
GraphSpec hn_graphspec(int n);
GraphModule build_Hn_graph(AlgPtr A, int n);

/* Two tops joined through their unique outgoing arrows into one slot. */
GraphModule ex7_pair(AlgPtr A, int a, int b);
/* One top 'top' with its unique arrow into 'mid' kept, everything else cut. */
GraphModule ex7_u(AlgPtr A, int top, int mid);
/* A source vertex with two outgoing arrows whose length-two continuations
 * are identified in one slot. */
GraphModule ex7_diamond(AlgPtr A, int v);
/* Tops z, x, y over vertices 1, 9, 10 with alpha z = (length-two path) x =
 * (length-two path) y tied in a single dependency group. */
GraphModule ex7_A1(AlgPtr delta);
/* Top at v in 5..8 joined through its arrow to the slot shared with the
 * length-two paths of the complementary extension column (10 for 5 and 6,
 * 9 for 7 and 8).  The kernel is one full P(2), and in contrast to the
 * ex7_pair sums these absorb the v-tops of every H_n. */
GraphModule ex7_bridge(AlgPtr delta, int v);

struct NamedApprox {
  int vertex = -1; /* target simple */
  ModuleMap f;
};

/* The catalogued right-approximation candidates for the ten simples over
 * ex7-delta, ordered by vertex.  The scan over an H-seeded corpus rejects
 * the four ex7_pair sums (S_5..S_8); the ex7_bridge modules pass. */
std::vector<NamedApprox> ex7_approximations(AlgPtr delta);
/* Seeds for the closure corpus: the amalgams above, H_1..H_4, the bridges,
 * and a few candidates of infinite projective dimension that the corpus
 * filter must reject. */
std::vector<RepPtr> ex7_corpus_seeds(AlgPtr delta);

}  // namespace bw
