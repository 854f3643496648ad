#include "textcover/suffix_array.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace textcover {
namespace {

// Induced sorting over s[0..n) with symbols in [0, upper]. The terminal
// sentinel is implicit: position n is treated as a unique smallest S-type
// suffix and never stored.
std::vector<int> sa_is(const std::vector<int>& s, int upper) {
  const int n = static_cast<int>(s.size());
  if (n == 0) return {};
  if (n == 1) return {0};
  if (n == 2) return s[0] < s[1] ? std::vector<int>{0, 1} : std::vector<int>{1, 0};

  std::vector<int> sa(n);
  std::vector<bool> s_type(n, false);
  for (int i = n - 2; i >= 0; --i) {
    s_type[i] = (s[i] == s[i + 1]) ? s_type[i + 1] : (s[i] < s[i + 1]);
  }

  // bucket_l[c]: first slot of c's bucket (L-suffixes come first);
  // bucket_s[c]: first slot of c's S-suffixes. bucket_l[c + 1] ends c's bucket.
  std::vector<int> bucket_l(upper + 2, 0), bucket_s(upper + 1, 0);
  for (int i = 0; i < n; ++i) {
    if (!s_type[i]) {
      ++bucket_s[s[i]];
    } else {
      ++bucket_l[s[i] + 1];
    }
  }
  for (int c = 0; c <= upper; ++c) {
    bucket_s[c] += bucket_l[c];
    bucket_l[c + 1] += bucket_s[c];
  }

  auto induce = [&](const std::vector<int>& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<int> buf(bucket_s);
    for (int d : lms) sa[buf[s[d]]++] = d;

    buf.assign(bucket_l.begin(), bucket_l.end() - 1);
    sa[buf[s[n - 1]]++] = n - 1;
    for (int i = 0; i < n; ++i) {
      const int v = sa[i];
      if (v >= 1 && !s_type[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
    }

    buf.assign(bucket_l.begin(), bucket_l.end());
    for (int i = n - 1; i >= 0; --i) {
      const int v = sa[i];
      if (v >= 1 && s_type[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
    }
  };

  std::vector<int> lms_rank(n + 1, -1);
  std::vector<int> lms;
  for (int i = 1; i < n; ++i) {
    if (!s_type[i - 1] && s_type[i]) {
      lms_rank[i] = static_cast<int>(lms.size());
      lms.push_back(i);
    }
  }
  induce(lms);
  if (lms.empty()) return sa;

  const int m = static_cast<int>(lms.size());
  std::vector<int> sorted_lms;
  sorted_lms.reserve(m);
  for (int v : sa) {
    if (lms_rank[v] != -1) sorted_lms.push_back(v);
  }

  // Name LMS substrings; equal substrings share a name.
  std::vector<int> reduced(m);
  int names = 0;
  reduced[lms_rank[sorted_lms[0]]] = 0;
  for (int i = 1; i < m; ++i) {
    int l = sorted_lms[i - 1];
    int r = sorted_lms[i];
    const int end_l = lms_rank[l] + 1 < m ? lms[lms_rank[l] + 1] : n;
    const int end_r = lms_rank[r] + 1 < m ? lms[lms_rank[r] + 1] : n;
    bool same = end_l - l == end_r - r;
    if (same) {
      while (l < end_l && s[l] == s[r]) {
        ++l;
        ++r;
      }
      if (l == n || s[l] != s[r]) same = false;
    }
    if (!same) ++names;
    reduced[lms_rank[sorted_lms[i]]] = names;
  }

  const auto reduced_sa = sa_is(reduced, names);
  for (int i = 0; i < m; ++i) sorted_lms[i] = lms[reduced_sa[i]];
  induce(sorted_lms);
  return sa;
}

}  // namespace

SuffixArray construct_suffix_array(SymbolView text, std::uint32_t alphabet_size) {
  if (text.empty()) throw std::invalid_argument("suffix array of an empty string");
  std::vector<int> s(text.begin(), text.end());
  const int upper = static_cast<int>(std::max<std::uint32_t>(alphabet_size, 1) - 1);
  if (*std::max_element(s.begin(), s.end()) > upper) {
    throw std::invalid_argument("symbol outside the alphabet");
  }
  const auto sa = sa_is(s, upper);
  return SuffixArray(sa.begin(), sa.end());
}

SuffixArray naive_suffix_array(SymbolView text) {
  if (text.empty()) throw std::invalid_argument("suffix array of an empty string");
  SuffixArray sa(text.size());
  std::iota(sa.begin(), sa.end(), 0u);
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(text.begin() + a, text.end(), text.begin() + b, text.end());
  });
  return sa;
}

}  // namespace textcover
