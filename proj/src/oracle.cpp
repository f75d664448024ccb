#include <map>

#include "coxroots/error.hpp"
#include "coxroots/recognizer.hpp"

namespace coxroots {

namespace {

// Dense weight table; zero where the generators commute.
std::vector<Number> weight_table(const CoxeterGraph& g) {
  const std::size_t n = g.size();
  std::vector<Number> w(n * n, Number(0));
  for (const auto& e : g.edges()) {
    w[e.u * n + e.v] = weight(e.label);
    w[e.v * n + e.u] = weight(e.label);
  }
  return w;
}

void require_oracle_input(const Word& w, const CoxeterGraph& g, const OracleOptions& opt) {
  check_word(g, w);
  if (w.size() > opt.max_length) {
    throw CapExceeded("oracle word length " + std::to_string(w.size()) + " exceeds cap " +
                      std::to_string(opt.max_length));
  }
  if (!g.exact_labels()) throw Error("matrix oracle needs exact edge labels");
}

// Entries of generator(s) * M and M * generator(t), computed on demand.
Number left_entry(const std::vector<Number>& m, const std::vector<Number>& wt, std::size_t n,
                  Vertex s, std::size_t r, std::size_t c) {
  if (r != s) return m[r * n + c];
  Number v = -m[s * n + c];
  for (std::size_t k = 0; k < n; ++k) {
    if (!wt[s * n + k].is_zero() && !m[k * n + c].is_zero()) v += wt[s * n + k] * m[k * n + c];
  }
  return v;
}

Number right_entry(const std::vector<Number>& m, const std::vector<Number>& wt, std::size_t n,
                   Vertex t, std::size_t r, std::size_t c) {
  if (c == t) return -m[r * n + t];
  const Number& wct = wt[t * n + c];
  if (wct.is_zero() || m[r * n + t].is_zero()) return m[r * n + c];
  return m[r * n + c] + wct * m[r * n + t];
}

}  // namespace

ReflectionMatrix ReflectionMatrix::identity(std::size_t n) {
  ReflectionMatrix out;
  out.n_ = n;
  out.m_.assign(n * n, Number(0));
  for (std::size_t i = 0; i < n; ++i) out.m_[i * n + i] = Number(1);
  return out;
}

ReflectionMatrix ReflectionMatrix::generator(const CoxeterGraph& g, Vertex s) {
  ReflectionMatrix out = identity(g.size());
  const std::size_t n = g.size();
  out.m_[s * n + s] = Number(-1);
  for (Vertex t : g.neighbours(s)) out.m_[s * n + t] = weight(g.label(s, t));
  return out;
}

ReflectionMatrix ReflectionMatrix::operator*(const ReflectionMatrix& o) const {
  if (n_ != o.n_) throw Error("matrix dimension mismatch");
  ReflectionMatrix out;
  out.n_ = n_;
  out.m_.assign(n_ * n_, Number(0));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Number& a = m_[i * n_ + k];
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!o.m_[k * n_ + j].is_zero()) out.m_[i * n_ + j] += a * o.m_[k * n_ + j];
      }
    }
  }
  return out;
}

void ReflectionMatrix::multiply_generator_right(const CoxeterGraph& g, Vertex s) {
  // column t += w_st * column s for neighbours t, then column s negated
  for (Vertex t : g.neighbours(s)) {
    const Number w = weight(g.label(s, t));
    for (std::size_t r = 0; r < n_; ++r) {
      if (!m_[r * n_ + s].is_zero()) m_[r * n_ + t] += w * m_[r * n_ + s];
    }
  }
  for (std::size_t r = 0; r < n_; ++r) m_[r * n_ + s] = -m_[r * n_ + s];
}

void ReflectionMatrix::multiply_generator_left(const CoxeterGraph& g, Vertex s) {
  // row s <- -row s + sum_t w_st * row t
  std::vector<Number> row(n_);
  for (std::size_t c = 0; c < n_; ++c) row[c] = -m_[s * n_ + c];
  for (Vertex t : g.neighbours(s)) {
    const Number w = weight(g.label(s, t));
    for (std::size_t c = 0; c < n_; ++c) {
      if (!m_[t * n_ + c].is_zero()) row[c] += w * m_[t * n_ + c];
    }
  }
  for (std::size_t c = 0; c < n_; ++c) m_[s * n_ + c] = std::move(row[c]);
}

ReflectionMatrix word_matrix(const Word& w, const CoxeterGraph& g) {
  check_word(g, w);
  ReflectionMatrix m = ReflectionMatrix::identity(g.size());
  for (Vertex s : w) m.multiply_generator_right(g, s);
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> oracle_find_deletion(const Word& w,
                                                                         const CoxeterGraph& g,
                                                                         OracleOptions opt) {
  require_oracle_input(w, g, opt);
  const std::size_t n = g.size();
  const auto wt = weight_table(g);
  // Deleting i and j leaves the product unchanged iff
  //   s_i * M * s_j == M,  M = s_{i+1} ... s_{j-1},
  // equivalently s_i * M == M * s_j (generators are involutions).
  for (std::size_t i = 0; i < w.size(); ++i) {
    ReflectionMatrix middle = ReflectionMatrix::identity(n);
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      const auto& m = middle.data();
      bool equal = true;
      for (std::size_t r = 0; r < n && equal; ++r) {
        for (std::size_t c = 0; c < n && equal; ++c) {
          equal = left_entry(m, wt, n, w[i], r, c) == right_entry(m, wt, n, w[j], r, c);
        }
      }
      if (equal) return std::make_pair(i, j);
      middle.multiply_generator_right(g, w[j]);
    }
  }
  return std::nullopt;
}

bool oracle_is_reduced_deletion(const Word& w, const CoxeterGraph& g, OracleOptions opt) {
  return !oracle_find_deletion(w, g, opt).has_value();
}

namespace {

Word oracle_reduce_memo(const Word& w, const CoxeterGraph& g, const OracleOptions& opt,
                        std::map<Word, Word>& memo) {
  if (const auto it = memo.find(w); it != memo.end()) return it->second;
  Word result = w;
  if (const auto d = oracle_find_deletion(w, g, opt)) {
    Word shorter;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k != d->first && k != d->second) shorter.push_back(w[k]);
    }
    result = oracle_reduce_memo(shorter, g, opt, memo);
  }
  memo.emplace(w, result);
  return result;
}

}  // namespace

Word oracle_reduce(const Word& w, const CoxeterGraph& g, OracleOptions opt) {
  std::map<Word, Word> memo;
  return oracle_reduce_memo(w, g, opt, memo);
}

}  // namespace coxroots
