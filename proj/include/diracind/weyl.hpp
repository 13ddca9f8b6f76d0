#ifndef DIRACIND_WEYL_HPP
#define DIRACIND_WEYL_HPP

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "diracind/rootsystem.hpp"

namespace diracind {

// Conjugacy class data shared by all finite groups in the project.
struct ConjClasses {
  std::vector<std::vector<int>> members;  // per class, ascending element ids
  std::vector<int> class_of;              // element id -> class id
  std::vector<int> reps;                  // minimal element id per class
  std::vector<long> sizes;
  std::vector<int> rep_order;             // order of representative
  std::vector<int> inverse_class;         // class of inverses
};

// The finite Weyl group, enumerated as exact integer matrices on V in
// simple-root coordinates.  Element 0 is the identity; elements appear in
// BFS order by length, so ids are deterministic.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, long bound = 1000000);

  const RootSystem& root_system() const { return *rs_; }
  long size() const { return (long)mats_.size(); }
  int rank() const { return rs_->rank; }

  int mult(int a, int b) const;
  int inverse(int a) const { return inv_[a]; }
  int right_mult_gen(int a, int j) const { return right_[a * rank() + j]; }
  int left_mult_gen(int a, int j) const { return left_[a * rank() + j]; }
  int length(int a) const { return len_[a]; }
  int order_of(int a) const;
  int sgn(int a) const { return len_[a] % 2 ? -1 : 1; }  // det on V

  QMatrix matrix(int a) const;
  QVector apply(int a, const QVector& v) const;
  int apply_to_root(int a, int root) const;
  int element_of_matrix_key(const std::vector<long>& key) const;
  int reflection_element(int root) const;  // s_alpha as a group element

  Rational det_one_minus(int a) const;
  bool is_elliptic(int a) const { return det_one_minus(a) != 0; }

  const ConjClasses& classes() const;
  long count_elliptic_classes() const;
  std::vector<bool> elliptic_flags() const;  // per class

  // Lexicographically least reduced word (left-to-right generator indices).
  std::vector<int> canonical_word(int a) const;

  // Subgroup given by generators (arbitrary elements of W).
  struct Subgroup {
    std::vector<int> elements;        // parent ids, ascending
    std::unordered_map<int, int> index_of;  // parent id -> subgroup id
    ConjClasses classes;              // over subgroup ids
    std::vector<int> fusion;          // subgroup class -> parent class
    long size() const { return (long)elements.size(); }
  };
  Subgroup subgroup(const std::vector<int>& generator_ids) const;
  Subgroup parabolic(const std::vector<int>& simple_subset) const;
  Subgroup rotation_subgroup() const;  // kernel of sgn

 private:
  const RootSystem* rs_;
  int n_;  // matrix dimension
  std::vector<int16_t> mats_flat_;
  std::vector<std::vector<long>> mats_;  // matrix keys (row-major)
  std::unordered_map<std::size_t, std::vector<int>> index_;  // hash -> candidates
  std::vector<int> right_, left_, inv_, len_;
  mutable ConjClasses classes_;
  mutable bool classes_done_ = false;

  std::size_t key_hash(const std::vector<long>& key) const;
  int lookup(const std::vector<long>& key) const;
  std::vector<long> mat_mult(const std::vector<long>& a, const std::vector<long>& b) const;
};

// Conjugacy classes by orbit closure for a generic multiplication law.
ConjClasses conjugacy_classes(long n, const std::vector<int>& generators,
                              const std::function<int(int, int)>& mult,
                              const std::function<int(int)>& inv, int identity);

}  // namespace diracind

#endif
