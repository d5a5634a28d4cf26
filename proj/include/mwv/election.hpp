#pragma once

#include <algorithm>
#include <vector>

#include "mwv/profile.hpp"

namespace mwv {

// A profile together with a committee size and the per-profile tables every
// rule and axiom checker reads (positions, approvals, pairwise counts, top-l
// sets). Immutable after construction.
class Election {
 public:
  Election(PreferenceProfile profile, int k) : profile_(std::move(profile)), k_(k) {
    n_ = profile_.num_voters();
    m_ = profile_.num_alternatives();
    check_committee_size(m_, k_);
    const auto un = static_cast<std::size_t>(n_);
    const auto um = static_cast<std::size_t>(m_);
    position_.assign(un * um, 0);
    prefer_.assign(um * um, 0);
    first_.assign(um, 0);
    last_.assign(um, 0);
    approval_count_.assign(um, 0);
    top_.assign(static_cast<std::size_t>(k_) * un, 0);
    for (int v = 0; v < n_; ++v) {
      const Ranking& r = profile_.ranking(v);
      AltMask prefix = 0;
      for (int p = 0; p < m_; ++p) {
        const auto a = r[static_cast<std::size_t>(p)];
        position_[static_cast<std::size_t>(v) * um + static_cast<std::size_t>(a)] = p;
        prefix |= bit(a);
        if (p < k_) top_[static_cast<std::size_t>(p) * un + static_cast<std::size_t>(v)] = prefix;
      }
      ++first_[static_cast<std::size_t>(r.front())];
      ++last_[static_cast<std::size_t>(r.back())];
      for (int i = 0; i < m_; ++i) {
        for (int j = i + 1; j < m_; ++j) {
          ++prefer_[static_cast<std::size_t>(r[static_cast<std::size_t>(i)]) * um +
                    static_cast<std::size_t>(r[static_cast<std::size_t>(j)])];
        }
      }
    }
    approvals_.assign(top_.end() - static_cast<std::ptrdiff_t>(un), top_.end());
    for (AltMask s : approvals_) {
      for (Alternative a : members_of(s)) ++approval_count_[static_cast<std::size_t>(a)];
    }
  }

  const PreferenceProfile& profile() const noexcept { return profile_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }

  int position(int v, Alternative a) const {
    return position_[static_cast<std::size_t>(v) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(a)];
  }
  int borda(int v, Alternative a) const { return m_ - 1 - position(v, a); }
  const Ranking& ranking(int v) const { return profile_.ranking(v); }

  // Number of voters ranking a above b.
  int prefer(Alternative a, Alternative b) const {
    return prefer_[static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b)];
  }
  int first_count(Alternative a) const { return first_[static_cast<std::size_t>(a)]; }
  int last_count(Alternative a) const { return last_[static_cast<std::size_t>(a)]; }
  int approval_count(Alternative a) const { return approval_count_[static_cast<std::size_t>(a)]; }

  // Top-k approval set of voter v.
  AltMask approval(int v) const { return approvals_[static_cast<std::size_t>(v)]; }
  const std::vector<AltMask>& approvals() const noexcept { return approvals_; }

  // Set of v's l most preferred alternatives, 1 <= l <= k.
  AltMask top_set(int v, int l) const {
    return top_[static_cast<std::size_t>(l - 1) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
  }

  ApprovalProfile approval_profile() const { return {m_, k_, approvals_}; }

 private:
  PreferenceProfile profile_;
  int k_ = 0;
  int n_ = 0;
  int m_ = 0;
  std::vector<int> position_;
  std::vector<int> prefer_;
  std::vector<int> first_;
  std::vector<int> last_;
  std::vector<int> approval_count_;
  std::vector<AltMask> top_;
  std::vector<AltMask> approvals_;
};

}  // namespace mwv
