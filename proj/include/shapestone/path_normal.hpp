/*
 * Copyright 2026 The Shapestone Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SHAPESTONE_PATH_NORMAL_HPP_
#define SHAPESTONE_PATH_NORMAL_HPP_

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shapestone/ast.hpp"
#include "shapestone/interpretation.hpp"

namespace shapestone {

/// Every path expression is equivalent to id, to an id-free E, or to E|id
/// with E id-free.
struct IdNormalForm {
  enum class Kind { JustId, IdFree, IdFreeUnionId };
  Kind kind = Kind::JustId;
  /// Absent for JustId; never contains an Id node.
  std::optional<PathExpr> expr;

  friend bool operator==(const IdNormalForm&, const IdNormalForm&) = default;
};

IdNormalForm normalize_id(const PathExpr& e);
/// Back to a single expression: id, E, or E|id.
PathExpr reassemble(const IdNormalForm& nf);
std::string to_string(const IdNormalForm& nf);

enum class Safety { Safe, Unsafe };

/// Classifies an id-free expression.  Throws std::invalid_argument if `e`
/// contains id.
Safety classify_safety(const PathExpr& e);
/// JustId and E|id are unsafe; IdFree defers to the expression.
Safety classify_safety(const IdNormalForm& nf);
const char* to_string(Safety s);

/// Sequence of atomic steps; empty means id.
struct PathString {
  struct Step {
    Name property;
    bool inverted = false;
    friend auto operator<=>(const Step&, const Step&) = default;
  };
  std::vector<Step> steps;

  PathString concat(const PathString& other) const;
  PathExpr to_path() const;
  /// Shorter strings first, then lexicographic by step.
  friend std::strong_ordering operator<=>(const PathString& a, const PathString& b);
  friend bool operator==(const PathString&, const PathString&) = default;
};

std::string to_string(const PathString& s);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultStringCap = 1000000;

/// Finite set of strings whose union agrees with `e` on every graph with
/// at most `n` nodes.  Throws BudgetExceeded once any intermediate set
/// grows beyond `cap`.
std::set<PathString> string_decompose(const PathExpr& e, std::size_t n,
                                      std::size_t cap = kDefaultStringCap);

/// Keeps the first string of each distinct extension on `interp`, in the
/// input order.
std::vector<PathString> dedup_by_extension(const std::set<PathString>& strings,
                                           const Interpretation& interp);

}  // namespace shapestone

#endif  // SHAPESTONE_PATH_NORMAL_HPP_
