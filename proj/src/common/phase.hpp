#pragma once

#include <complex>
#include <vector>

#include "common/intmod.hpp"

namespace qclab {

using cplx = std::complex<double>;

// Table of the m-th roots of unity e(k/m), k = 0..m-1.
class RootTable {
 public:
  explicit RootTable(i64 m);
  i64 order() const { return m_; }
  cplx operator[](i64 k) const { return roots_[mod(k, m_)]; }

 private:
  i64 m_;
  std::vector<cplx> roots_;
};

// Integer counts per phase residue mod m. The value represented is
// sum_r count[r] * e(r/m); conversion to a complex number happens once, in
// ascending-r order, so results are independent of accumulation order.
class PhaseCounts {
 public:
  explicit PhaseCounts(i64 m) : m_(m), counts_(static_cast<size_t>(m), 0) {}

  i64 order() const { return m_; }
  void add(i64 r, i64 count = 1) { counts_[mod(r, m_)] += count; }
  i64 count(i64 r) const { return counts_[mod(r, m_)]; }
  const std::vector<i64>& counts() const { return counts_; }

  i64 total() const;
  cplx value() const;
  cplx value(const RootTable& table) const;

  // Exact zero test for the special shapes used by the character
  // orthogonality identities: true when the counts are constant along a full
  // coset progression {offset + k*step} and zero elsewhere, with step < m.
  // Such a vector contracts to an exact zero sum of roots of unity.
  bool is_balanced_progression() const;

  // True when this equals `other` after shifting every phase by `shift`.
  bool equals_shifted(const PhaseCounts& other, i64 shift) const;

 private:
  i64 m_;
  std::vector<i64> counts_;
};

}  // namespace qclab
