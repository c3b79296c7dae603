#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heckeho::weyl {

using NodeId = int;
// Subsets of the affine node set. Node i is bit i.
using NodeSet = std::uint64_t;

inline constexpr bool has_node(NodeSet s, NodeId n) { return (s >> n) & 1u; }
inline constexpr NodeSet single(NodeId n) { return NodeSet{1} << n; }
inline int node_count(NodeSet s) { return std::popcount(s); }
inline constexpr bool is_subset(NodeSet a, NodeSet b) { return (a & ~b) == 0; }
std::vector<NodeId> nodes_of(NodeSet s);

// GL_{n_1} x ... x GL_{n_r} x (split torus of rank l) over F_q.
// Factors are kept sorted non-increasing; factor indices are 0-based.
struct GroupSpec {
  std::vector<int> factors;
  int torus_rank = 0;
  int q = 0;
  int p = 0;
  int f = 0;

  int rank() const { return static_cast<int>(factors.size()); }
  int node_count() const;
  // Dimension of the diagonal torus: sum of n_i plus the torus rank.
  int torus_dim() const;
  int offset(int factor) const;
  NodeId node(int factor, int local) const { return offset(factor) + local; }
  int factor_of(NodeId n) const;
  int local_of(NodeId n) const { return n - offset(factor_of(n)); }
  NodeSet factor_nodes(int factor) const;
  NodeSet all_nodes() const;

  // Node names look like "s2.0": factor 2 (1-based), local index 0.
  std::string node_name(NodeId n) const;
  NodeId parse_node(std::string_view name) const;

  bool operator==(const GroupSpec&) const = default;
};

GroupSpec build_spec(std::vector<int> factors, int torus_rank, int q);
// (p, f) with q = p^f, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power(long long q);

// A union of connected affine Dynkin diagrams described by a generalized
// Cartan matrix. Bond orders follow a_ij * a_ji: 0,1,2,3 give 2,3,4,6; larger
// products give an infinite bond, reported as 0.
struct AffineDynkin {
  std::vector<std::vector<int>> cartan;
  std::vector<int> component;  // component index of every node
  std::vector<std::string> kinds;
  std::vector<std::string> names;

  int node_count() const { return static_cast<int>(cartan.size()); }
  int component_count() const { return static_cast<int>(kinds.size()); }
  NodeSet component_nodes(int c) const;
  NodeSet all_nodes() const;
  int bond(NodeId s, NodeId t) const;
  bool adjacent(NodeId s, NodeId t) const { return s != t && bond(s, t) != 2; }
};

AffineDynkin affine_dynkin(const GroupSpec& spec);
// Untwisted affine diagram of an irreducible finite type: 'A'..'G' with rank.
// Node 0 is the affine node; 1..rank follow Bourbaki numbering.
AffineDynkin affine_dynkin(char type, int rank);
AffineDynkin disjoint_union(const AffineDynkin& a, const AffineDynkin& b);

// Finite Cartan matrix, Bourbaki numbering shifted to 0-based.
std::vector<std::vector<int>> finite_cartan(char type, int rank);

struct Face {
  NodeSet nodes = 0;
  int universe = 0;  // node count of the diagram the face lives in

  bool operator==(const Face&) const = default;
};

// Faces of the standard chamber: subsets proper in every component, in
// lexicographic order of their sorted node lists.
std::vector<Face> faces(const AffineDynkin& d);
std::vector<Face> faces(const GroupSpec& spec);
Face make_face(const AffineDynkin& d, NodeSet nodes);
Face make_face(const GroupSpec& spec, NodeSet nodes);
// True when F' lies in the closure of F, i.e. S_F is contained in S_F'.
bool closure_leq(const Face& f, const Face& g);
std::vector<std::string> face_names(const GroupSpec& spec, const Face& f);

// Image of a node under the k-th power of the length-zero generator of
// factor i. The node must belong to that factor.
NodeId omega_rotate(const GroupSpec& spec, int factor, int k, NodeId node);

struct CoxeterType {
  std::vector<std::pair<char, int>> components;

  static CoxeterType parse(std::string_view text);
  std::string str() const;
  int rank() const;
  bool operator==(const CoxeterType&) const = default;
};

// Finite type of a Cartan matrix whose components are all of finite type.
CoxeterType classify_cartan(const std::vector<std::vector<int>>& cartan);

// A finite Weyl group realised as permutations of its root system.
// Element 0 is the identity; elements are listed breadth-first, so lengths are
// non-decreasing and every element's word extends its parent's by one letter.
class CoxeterGroup {
 public:
  static inline constexpr std::size_t default_cap = 200000;

  static CoxeterGroup from_cartan(std::vector<std::vector<int>> cartan,
                                  std::size_t max_elements = default_cap);
  static CoxeterGroup from_type(const CoxeterType& type, std::size_t max_elements = default_cap);

  const CoxeterType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  std::size_t size() const { return length_.size(); }
  int length(std::size_t w) const { return length_[w]; }
  // Index of w*s.
  std::size_t right_mult(std::size_t w, int s) const { return right_[w * rank() + s]; }
  std::size_t left_mult(int s, std::size_t w) const { return left_[w * rank() + s]; }
  std::vector<int> word(std::size_t w) const;
  std::size_t root_count() const { return roots_.size(); }
  std::size_t positive_root_count() const { return roots_.size() / 2; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // Number of positive roots sent to negative roots.
  int inversions(std::size_t w) const;
  std::size_t longest() const { return length_.size() - 1; }

 private:
  CoxeterType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<bool> positive_;
  std::vector<std::vector<std::uint16_t>> perms_;
  std::vector<int> length_;
  std::vector<std::size_t> parent_;
  std::vector<int> last_letter_;
  std::vector<std::size_t> right_;
  std::vector<std::size_t> left_;
};

CoxeterGroup enumerate_coxeter(const CoxeterType& type,
                               std::size_t max_elements = CoxeterGroup::default_cap);
// Parabolic subgroup generated by the nodes of a face; generator g is the
// g-th node of the face in increasing order.
CoxeterGroup face_group(const AffineDynkin& d, const Face& f,
                        std::size_t max_elements = CoxeterGroup::default_cap);
std::vector<std::vector<int>> sub_cartan(const AffineDynkin& d, NodeSet nodes);

}  // namespace heckeho::weyl
