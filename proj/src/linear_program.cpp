#include "hamcut/linear_program.hpp"

#include <limits>

#include "hamcut/error.hpp"

namespace hamcut {

namespace {

enum class ColumnKind { Structural, Slack, Artificial };

class Tableau {
 public:
  Tableau(std::span<const LinearConstraint> constraints, std::size_t num_vars) : num_vars_(num_vars) {
    const std::size_t m = constraints.size();
    // Columns: x+ and x- for each free variable, then one slack or surplus per
    // inequality, then artificials where no slack can start in the basis.
    std::vector<Relation> relations;
    std::vector<bool> negate(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (constraints[i].coeffs.size() != num_vars) {
        throw Error(ErrorKind::DimensionMismatch, "constraint width differs from variable count");
      }
      Relation rel = constraints[i].relation;
      if (constraints[i].rhs < 0) {
        negate[i] = true;
        if (rel == Relation::LessEqual) rel = Relation::GreaterEqual;
        else if (rel == Relation::GreaterEqual) rel = Relation::LessEqual;
      }
      relations.push_back(rel);
    }
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (Relation rel : relations) {
      if (rel != Relation::Equal) ++slack_count;
      if (rel != Relation::LessEqual) ++artificial_count;
    }
    const std::size_t structural = 2 * num_vars;
    cols_ = structural + slack_count + artificial_count;
    kinds_.assign(cols_, ColumnKind::Structural);
    rows_.assign(m, std::vector<Rational>(cols_ + 1));
    basis_.assign(m, 0);

    std::size_t next_slack = structural;
    std::size_t next_artificial = structural + slack_count;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = rows_[i];
      const Rational flip = negate[i] ? -1 : 1;
      for (std::size_t j = 0; j < num_vars; ++j) {
        row[2 * j] = flip * constraints[i].coeffs[j];
        row[2 * j + 1] = -row[2 * j];
      }
      row[cols_] = flip * constraints[i].rhs;
      switch (relations[i]) {
        case Relation::LessEqual:
          kinds_[next_slack] = ColumnKind::Slack;
          row[next_slack] = 1;
          basis_[i] = next_slack++;
          break;
        case Relation::GreaterEqual:
          kinds_[next_slack] = ColumnKind::Slack;
          row[next_slack++] = -1;
          [[fallthrough]];
        case Relation::Equal:
          kinds_[next_artificial] = ColumnKind::Artificial;
          row[next_artificial] = 1;
          basis_[i] = next_artificial++;
          break;
      }
    }

    // Phase-one objective: minimize the sum of artificials. Reduced costs are
    // c_j minus the artificial rows summed.
    objective_.assign(cols_ + 1, 0);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (kinds_[j] == ColumnKind::Artificial) objective_[j] = 1;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (kinds_[basis_[i]] != ColumnKind::Artificial) continue;
      for (std::size_t j = 0; j <= cols_; ++j) objective_[j] -= rows_[i][j];
    }
  }

  void optimize() {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (objective_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == cols_) return;

      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always qualifies.
      if (leaving == rows_.size()) return;
      pivot(leaving, entering);
    }
  }

  bool feasible() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (kinds_[basis_[i]] == ColumnKind::Artificial && rows_[i][cols_] != 0) return false;
    }
    return true;
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> values(cols_);
    for (std::size_t i = 0; i < rows_.size(); ++i) values[basis_[i]] = rows_[i][cols_];
    std::vector<Rational> x(num_vars_);
    for (std::size_t j = 0; j < num_vars_; ++j) x[j] = values[2 * j] - values[2 * j + 1];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational inv = 1 / prow[c];
    for (Rational& v : prow) v *= inv;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational factor = row[c];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (prow[j] != 0) row[j] -= factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[r] = c;
  }

  std::size_t num_vars_;
  std::size_t cols_ = 0;
  std::vector<ColumnKind> kinds_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(std::span<const LinearConstraint> constraints,
                                                         std::size_t num_vars) {
  if (constraints.empty()) return std::vector<Rational>(num_vars);
  Tableau tableau(constraints, num_vars);
  tableau.optimize();
  if (!tableau.feasible()) return std::nullopt;
  return tableau.solution();
}

}  // namespace hamcut
