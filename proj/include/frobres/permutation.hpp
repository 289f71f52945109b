#ifndef FROBRES_PERMUTATION_HPP
#define FROBRES_PERMUTATION_HPP

#include <string>
#include <vector>

namespace frobres {

/*
 * Permutation of {1..n}. Stored 0-based internally; all text I/O is 1-based
 * disjoint-cycle notation with commas, e.g. "(1,2,3,4,5)(6,7)" or "()".
 */
class Permutation {
  public:
    Permutation() = default;
    static Permutation identity(int n);
    /// images[i] = image of point i (0-based). Must be a bijection.
    explicit Permutation(std::vector<int> images);
    /// Parse cycle notation; whitespace-insensitive, 1-based. Throws BadInputError.
    static Permutation parse(const std::string& s, int n);

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation compose(const Permutation& o) const; // this after o
    Permutation inverse() const;
    Permutation power(long k) const; // k >= 0
    bool is_identity() const;
    bool is_even() const;
    int order() const;
    std::vector<int> cycle_type() const; // ascending partition of n
    std::string cycle_string() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

  private:
    std::vector<int> img_;
};

} // namespace frobres

#endif
