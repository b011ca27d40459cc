#pragma once

// Independent word-problem oracle: the geometric representation of W as real
// matrices, explored by breadth-first search over the Cayley graph. The
// representation is faithful, so matrices identify elements. A ball of
// radius R holds every element of length <= R with its exact length.

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "toricheap/coxeter.hpp"

namespace oracle {

using toricheap::CoxeterGraph;
using toricheap::Gen;
using toricheap::Word;

class CayleyBall {
 public:
  using Matrix = std::vector<double>;

  CayleyBall(const CoxeterGraph& g, std::size_t radius) : n_(g.rank()), radius_(radius) {
    for (Gen s = 0; s < n_; ++s) gens_.push_back(reflection(g, s));
    Matrix id(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = 1.0;
    add(id, 0, Word{});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t e = queue.front();
      queue.pop_front();
      if (length_[e] == radius_) continue;
      for (Gen s = 0; s < n_; ++s) {
        const Matrix m = mul(mats_[e], gens_[s]);
        auto [id2, fresh] = add(m, length_[e] + 1, extend(words_[e], s));
        if (fresh) queue.push_back(id2);
      }
    }
  }

  std::size_t size() const { return mats_.size(); }
  std::size_t radius() const { return radius_; }
  std::size_t length(std::size_t e) const { return length_[e]; }
  const Word& shortlex_word(std::size_t e) const { return words_[e]; }

  // Element of a word, or npos when the walk leaves the ball.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t element(const Word& w) const {
    Matrix m = identity();
    for (Gen s : w) m = mul(m, gens_[s]);
    return find(m);
  }
  // Exact for words of length <= radius.
  bool is_reduced(const Word& w) const {
    const std::size_t e = element(w);
    return e != npos && length_[e] == w.size();
  }

  // Elements whose length is exactly k.
  std::vector<std::size_t> sphere(std::size_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < size(); ++e) {
      if (length_[e] == k) out.push_back(e);
    }
    return out;
  }

  // All reduced words of length <= max_len, by extending reduced words.
  std::vector<Word> reduced_words_up_to(std::size_t max_len) const {
    std::vector<Word> out{Word{}};
    std::vector<std::pair<Word, Matrix>> frontier{{Word{}, identity()}};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<std::pair<Word, Matrix>> next;
      for (const auto& [w, m] : frontier) {
        for (Gen s = 0; s < n_; ++s) {
          Matrix ms = mul(m, gens_[s]);
          const std::size_t e = find(ms);
          if (e == npos || length_[e] != len) continue;
          next.emplace_back(extend(w, s), std::move(ms));
        }
      }
      for (const auto& [w, m] : next) out.push_back(w);
      frontier = std::move(next);
    }
    return out;
  }

  // Conjugacy class of an element inside a finite group (the ball must be
  // the whole group).
  std::set<std::size_t> conjugacy_class(std::size_t e) const {
    std::set<std::size_t> seen{e};
    std::deque<std::size_t> queue{e};
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (Gen s = 0; s < n_; ++s) {
        const std::size_t y = find(mul(gens_[s], mul(mats_[x], gens_[s])));
        if (y != npos && seen.insert(y).second) queue.push_back(y);
      }
    }
    return seen;
  }

  // l(w) is minimal in its conjugacy class (finite groups only).
  bool strongly_cyclically_reduced(const Word& w) const {
    const std::size_t e = element(w);
    for (std::size_t c : conjugacy_class(e)) {
      if (length_[c] < length_[e]) return false;
    }
    return true;
  }

 private:
  static Word extend(Word w, Gen s) {
    w.push_back(s);
    return w;
  }

  Matrix identity() const {
    Matrix id(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) id[i * n_ + i] = 1.0;
    return id;
  }

  Matrix reflection(const CoxeterGraph& g, Gen s) const {
    // sigma_s(a_t) = a_t - 2 B(a_s, a_t) a_s, columns are images.
    Matrix m = identity();
    for (Gen t = 0; t < n_; ++t) {
      const auto bond = g.m(s, t);
      const double b = bond.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / bond.value());
      m[s * n_ + t] -= 2.0 * b;
    }
    return m;
  }

  Matrix mul(const Matrix& a, const Matrix& b) const {
    Matrix c(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < n_; ++k) {
        const double x = a[i * n_ + k];
        if (x == 0.0) continue;
        for (std::size_t j = 0; j < n_; ++j) c[i * n_ + j] += x * b[k * n_ + j];
      }
    }
    return c;
  }

  std::vector<std::int64_t> key(const Matrix& m) const {
    std::vector<std::int64_t> k(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) k[i] = std::llround(m[i] * 1e6);
    return k;
  }

  std::size_t find(const Matrix& m) const {
    auto it = index_.find(key(m));
    return it == index_.end() ? npos : it->second;
  }

  std::pair<std::size_t, bool> add(const Matrix& m, std::size_t len, Word w) {
    auto [it, fresh] = index_.emplace(key(m), mats_.size());
    if (fresh) {
      mats_.push_back(m);
      length_.push_back(len);
      words_.push_back(std::move(w));
    }
    return {it->second, fresh};
  }

  std::size_t n_;
  std::size_t radius_;
  std::vector<Matrix> gens_;
  std::vector<Matrix> mats_;
  std::vector<std::size_t> length_;
  std::vector<Word> words_;
  std::map<std::vector<std::int64_t>, std::size_t> index_;
};

}  // namespace oracle
