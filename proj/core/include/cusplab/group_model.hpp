#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cusplab/metric_graph.hpp"

namespace cusplab {

enum class Family { Free, FreeAbelian, Finite };

// One letter of a word: generator symbol index plus inverse flag. Letter
// order (sym ascending, positive before inverse) induces the shortlex order
// used everywhere for canonical representatives.
struct Letter {
  int sym = 0;
  bool inv = false;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.sym == b.sym && a.inv == b.inv;
  }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.sym != b.sym) return a.sym < b.sym;
    return a.inv < b.inv;
  }
};

using Word = std::vector<Letter>;

// Computable model of a finitely generated group. Three families cover the
// experiments: free groups, free abelian groups, finite groups given by a
// multiplication table. Elements are handled as normal-form words over the
// model's symbols; the identity is the empty word.
class GroupModel {
 public:
  GroupModel() = default;  // empty placeholder; use the factories below

  static GroupModel free_group(int rank);
  static GroupModel free_abelian(int rank);
  // table[i][j] = index of element i*j. Optional element names (default
  // "e", "g1", "g2", ...) and generator subset (default: every non-identity
  // element).
  static GroupModel finite(std::vector<std::vector<int>> table,
                           std::vector<std::string> names = {},
                           std::vector<int> generator_elements = {});

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int order() const { return static_cast<int>(table_.size()); }  // finite only

  // Symbols usable in words: rank letters for the free families, one symbol
  // per element for the finite family.
  int num_symbols() const;
  const std::string& symbol_name(int sym) const;

  // Default generating set as single-letter words: the rank letters, or the
  // finite model's generator elements.
  std::vector<Word> default_generators() const;

  // Word text uses one symbol per letter with a trailing '-' for inverses,
  // e.g. "aba-b-" = a b a^-1 b^-1. Models with multi-character symbol names
  // (finite family) use whitespace-separated tokens instead.
  Word parse_word(std::string_view text) const;
  std::string render_word(const Word& w) const;

  Word normal_form(const Word& w) const;
  Word multiply(const Word& a, const Word& b) const;  // normal_form(a*b)
  Word inverse(const Word& w) const;

  bool is_identity(const Word& w) const { return normal_form(w).empty(); }

  // Shortlex on normal forms: by length, then letter order.
  static bool shortlex_less(const Word& a, const Word& b);

  // Free-abelian exponent vector of a word (free_abelian family only).
  std::vector<long long> exponents(const Word& w) const;

  // Finite-family element index of a word (finite family only).
  int element_of(const Word& w) const;

 private:
  Family family_ = Family::Free;
  int rank_ = 0;
  std::vector<std::vector<int>> table_;  // finite multiplication table
  std::vector<int> inverse_elem_;        // finite inverses
  std::vector<int> generator_elems_;     // finite generator subset
  int identity_ = 0;
  std::vector<std::string> names_;
  bool single_char_names_ = true;
};

// Ball of given radius in the Cayley graph of the model with respect to a
// generating set (default: the model's own generators). Vertex 0 is the
// identity; vertices are added in breadth-first order, so ids are grouped by
// distance from the identity and deterministic.
struct CayleyBall {
  MetricGraph graph;
  std::vector<Word> words;  // normal form per vertex
  std::vector<int> dist;    // word-metric distance from the identity
  int radius = 0;
  std::vector<Word> generators;
  std::map<std::string, int> index;  // rendered normal form -> vertex id

  int find(const GroupModel& m, const Word& w) const;
  int max_word_length() const;
};

CayleyBall cayley_ball(const GroupModel& m, int radius, std::vector<Word> generators = {});

// Peripheral subgroup given by generator words. The free family supports
// cyclic peripherals only (one nontrivial generator word); free abelian uses
// an integer lattice basis; finite takes the generated subgroup. A trivial
// peripheral (all generators reduce to the identity) is rejected.
struct PeripheralSpec {
  std::string name;
  std::vector<std::string> generator_words;
};

class PeripheralSubgroup {
 public:
  static PeripheralSubgroup from_spec(const GroupModel& m, const PeripheralSpec& spec);

  bool contains(const GroupModel& m, const Word& w) const;
  const std::string& name() const { return name_; }

  // Canonical key identifying the left coset of an element among ball
  // members; equal keys iff equal cosets (for elements of the same ball).
  std::string coset_key(const GroupModel& m, const CayleyBall& ball, int vertex) const;

 private:
  std::string name_;
  Family family_ = Family::Free;
  // free: single cyclic generator
  Word free_gen_;
  int free_cyc_len_ = 0;
  // free abelian: lattice basis in reduced row HNF
  std::vector<std::vector<long long>> basis_;
  // finite: sorted element set of the subgroup
  std::vector<int> subgroup_;
};

// Partition of ball vertices into intersections with left cosets of the
// peripheral subgroup. Pieces are ordered by the shortlex order of their
// representative (least member) word.
struct CosetPieces {
  std::string peripheral;
  std::vector<std::vector<int>> members;  // vertex ids, ascending
  std::vector<int> rep_vertex;            // shortlex-least member
  std::vector<std::string> rep_word;
  std::vector<int> piece_of;              // vertex -> piece index
};

CosetPieces coset_pieces(const CayleyBall& ball, const GroupModel& m, const PeripheralSpec& spec);

// Partial left translation x -> g*x on ball vertices; -1 where g*x lands
// outside the ball.
std::vector<int> left_translate(const CayleyBall& ball, const GroupModel& m, const Word& g);

}  // namespace cusplab
