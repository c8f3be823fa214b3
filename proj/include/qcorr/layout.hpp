// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file layout.hpp
 * Tensor factor bookkeeping for multipartite operators.
 *
 * A SubsystemLayout is an ordered list of labeled factors. Flat indices
 * follow the row-major convention: the leftmost factor varies slowest.
 * Every structural operation (partial trace, embedding, factor insertion)
 * is expressed through this one convention so the index arithmetic is
 * written exactly once.
 */

#ifndef QCORR_LAYOUT_HPP
#define QCORR_LAYOUT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

/// Dense algebra above this total dimension is rejected outright.
inline constexpr std::size_t kMaxTotalDim = 256;

struct Subsystem {
  std::string label;
  std::size_t dim = 0;
};

class SubsystemLayout {
 public:
  SubsystemLayout() = default;

  explicit SubsystemLayout(std::vector<Subsystem> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ValidationError("layout: needs at least one factor");
    std::set<std::string> seen;
    std::size_t total = 1;
    for (const Subsystem& p : parts_) {
      if (p.label.empty()) throw ValidationError("layout: empty factor label");
      if (p.dim == 0) throw ValidationError("layout: factor '" + p.label + "' has dimension 0");
      if (!seen.insert(p.label).second)
        throw ValidationError("layout: duplicate factor label '" + p.label + "'");
      if (total > kMaxTotalDim / p.dim)
        throw ValidationError("layout: total dimension exceeds " + std::to_string(kMaxTotalDim));
      total *= p.dim;
    }
  }

  std::size_t factor_count() const { return parts_.size(); }

  const Subsystem& factor(std::size_t i) const { return parts_.at(i); }

  std::size_t total_dim() const {
    std::size_t d = 1;
    for (const Subsystem& p : parts_) d *= p.dim;
    return d;
  }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i].label == label) return i;
    return std::nullopt;
  }

  bool has_label(const std::string& label) const { return index_of(label).has_value(); }

  std::size_t require_index(const std::string& label) const {
    auto idx = index_of(label);
    if (!idx) throw ValidationError("layout: no factor labeled '" + label + "'");
    return *idx;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(parts_.size());
    for (const Subsystem& p : parts_) out.push_back(p.label);
    return out;
  }

  /// Flat-index step between consecutive values of factor i.
  std::size_t stride(std::size_t i) const {
    std::size_t s = 1;
    for (std::size_t k = i + 1; k < parts_.size(); ++k) s *= parts_[k].dim;
    return s;
  }

  std::string describe() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += " x ";
      out += parts_[i].label + "(" + std::to_string(parts_[i].dim) + ")";
    }
    return out;
  }

  friend bool operator==(const SubsystemLayout& a, const SubsystemLayout& b) {
    if (a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
      if (a.parts_[i].label != b.parts_[i].label || a.parts_[i].dim != b.parts_[i].dim)
        return false;
    return true;
  }

 private:
  std::vector<Subsystem> parts_;
};

namespace detail {

/// Factor positions for `keep`, in layout order. Rejects unknown labels,
/// duplicates, and an empty keep set.
inline std::vector<std::size_t> kept_positions(const SubsystemLayout& layout,
                                               const std::vector<std::string>& keep) {
  if (keep.empty()) throw ValidationError("partial_trace: keep set is empty");
  std::set<std::string> want(keep.begin(), keep.end());
  if (want.size() != keep.size())
    throw ValidationError("partial_trace: duplicate label in keep set");
  std::vector<std::size_t> pos;
  for (std::size_t i = 0; i < layout.factor_count(); ++i)
    if (want.erase(layout.factor(i).label)) pos.push_back(i);
  if (!want.empty())
    throw ValidationError("partial_trace: label '" + *want.begin() + "' not in layout");
  return pos;
}

/// Flat offsets contributed by one group of factors as its joint index runs
/// over its range. offsets.size() is the product of the group dimensions.
inline std::vector<std::size_t> group_offsets(const SubsystemLayout& layout,
                                              const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t p : positions) {
    const std::size_t dim = layout.factor(p).dim;
    const std::size_t stride = layout.stride(p);
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dim);
    for (std::size_t base : offsets)
      for (std::size_t v = 0; v < dim; ++v) next.push_back(base + v * stride);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace detail

/// Layout remaining after tracing out everything not in `keep`.
/// Kept factors stay in their original order.
inline SubsystemLayout reduced_layout(const SubsystemLayout& layout,
                                      const std::vector<std::string>& keep) {
  std::vector<Subsystem> parts;
  for (std::size_t p : detail::kept_positions(layout, keep)) parts.push_back(layout.factor(p));
  return SubsystemLayout(parts);
}

/// Trace out every factor whose label is not in `keep`.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const SubsystemLayout& layout,
                                   const std::vector<std::string>& keep) {
  if (!m.is_square() || m.rows() != layout.total_dim())
    throw ValidationError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " but layout has total dimension " +
                          std::to_string(layout.total_dim()));
  const std::vector<std::size_t> kept = detail::kept_positions(layout, keep);
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < layout.factor_count(); ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) traced.push_back(i);

  const std::vector<std::size_t> keep_off = detail::group_offsets(layout, kept);
  const std::vector<std::size_t> tr_off = detail::group_offsets(layout, traced);

  ComplexMatrix out(keep_off.size(), keep_off.size());
  for (std::size_t r = 0; r < keep_off.size(); ++r)
    for (std::size_t c = 0; c < keep_off.size(); ++c) {
      cplx sum = 0.0;
      for (std::size_t t : tr_off) sum += m(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = sum;
    }
  return out;
}

/// Lift an operator acting on one factor to the full space:
/// identity on every other factor.
inline ComplexMatrix embed_at(const ComplexMatrix& op, const SubsystemLayout& layout,
                              const std::string& label) {
  const std::size_t slot = layout.require_index(label);
  const std::size_t d = layout.factor(slot).dim;
  if (!op.is_square() || op.rows() != d)
    throw ValidationError("embed_at: operator is " + std::to_string(op.rows()) + "x" +
                          std::to_string(op.cols()) + " but factor '" + label +
                          "' has dimension " + std::to_string(d));
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < slot; ++i) left *= layout.factor(i).dim;
  for (std::size_t i = slot + 1; i < layout.factor_count(); ++i) right *= layout.factor(i).dim;
  return kron(kron(ComplexMatrix::identity(left), op), ComplexMatrix::identity(right));
}

/// Insert a fresh factor at `position`, prepared in the pure state |0><0|.
/// Returns the enlarged matrix; pair with insert_factor_layout for the
/// matching layout.
inline ComplexMatrix insert_pure_factor(const ComplexMatrix& m, const SubsystemLayout& layout,
                                        std::size_t position, std::size_t dim) {
  if (!m.is_square() || m.rows() != layout.total_dim())
    throw ValidationError("insert_pure_factor: matrix/layout dimension mismatch");
  if (position > layout.factor_count())
    throw ValidationError("insert_pure_factor: position out of range");
  if (dim == 0) throw ValidationError("insert_pure_factor: dimension 0");
  std::size_t right = 1;
  for (std::size_t i = position; i < layout.factor_count(); ++i) right *= layout.factor(i).dim;
  const std::size_t total = layout.total_dim();
  ComplexMatrix out(total * dim, total * dim);
  // Old index L*right + R maps to L*(dim*right) + 0*right + R.
  for (std::size_t r = 0; r < total; ++r) {
    const std::size_t nr = (r / right) * (dim * right) + (r % right);
    for (std::size_t c = 0; c < total; ++c) {
      const std::size_t nc = (c / right) * (dim * right) + (c % right);
      out(nr, nc) = m(r, c);
    }
  }
  return out;
}

inline SubsystemLayout insert_factor_layout(const SubsystemLayout& layout, std::size_t position,
                                            const Subsystem& factor) {
  std::vector<Subsystem> parts;
  for (std::size_t i = 0; i < layout.factor_count(); ++i) {
    if (i == position) parts.push_back(factor);
    parts.push_back(layout.factor(i));
  }
  if (position == layout.factor_count()) parts.push_back(factor);
  return SubsystemLayout(parts);
}

/// Merge adjacent factors i and i+1 into one factor named `label`.
/// Row-major indexing makes this a pure relabeling: the matrix is unchanged.
inline SubsystemLayout fuse_adjacent(const SubsystemLayout& layout, std::size_t i,
                                     const std::string& label) {
  if (i + 1 >= layout.factor_count())
    throw ValidationError("fuse_adjacent: no factor pair at position " + std::to_string(i));
  std::vector<Subsystem> parts;
  for (std::size_t k = 0; k < layout.factor_count(); ++k) {
    if (k == i) {
      parts.push_back({label, layout.factor(i).dim * layout.factor(i + 1).dim});
      ++k;  // skip the absorbed factor
      continue;
    }
    parts.push_back(layout.factor(k));
  }
  return SubsystemLayout(parts);
}

}  // namespace qcorr

#endif  // QCORR_LAYOUT_HPP
