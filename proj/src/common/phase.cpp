#include "common/phase.hpp"

#include <cmath>
#include <numbers>

namespace qclab {

RootTable::RootTable(i64 m) : m_(m), roots_(static_cast<size_t>(m)) {
  const double w = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (i64 k = 0; k < m; ++k) {
    roots_[k] = {std::cos(w * k), std::sin(w * k)};
  }
}

i64 PhaseCounts::total() const {
  i64 t = 0;
  for (i64 c : counts_) t += c;
  return t;
}

cplx PhaseCounts::value() const {
  RootTable table(m_);
  return value(table);
}

cplx PhaseCounts::value(const RootTable& table) const {
  cplx acc = 0.0;
  for (i64 r = 0; r < m_; ++r) {
    if (counts_[r] != 0) acc += static_cast<double>(counts_[r]) * table[r];
  }
  return acc;
}

bool PhaseCounts::is_balanced_progression() const {
  i64 first = -1;
  for (i64 r = 0; r < m_; ++r) {
    if (counts_[r] != 0) {
      first = r;
      break;
    }
  }
  if (first < 0) return true;  // all-zero counts
  i64 second = -1;
  for (i64 r = first + 1; r < m_; ++r) {
    if (counts_[r] != 0) {
      second = r;
      break;
    }
  }
  if (second < 0) return false;  // single spike cannot cancel
  i64 step = second - first;
  if (m_ % step != 0) return false;
  i64 c = counts_[first];
  for (i64 r = 0; r < m_; ++r) {
    bool on = (mod(r - first, step) == 0);
    if (counts_[r] != (on ? c : 0)) return false;
  }
  return true;
}

bool PhaseCounts::equals_shifted(const PhaseCounts& other, i64 shift) const {
  if (other.m_ != m_) return false;
  for (i64 r = 0; r < m_; ++r) {
    if (counts_[mod(r + shift, m_)] != other.counts_[r]) return false;
  }
  return true;
}

}  // namespace qclab
