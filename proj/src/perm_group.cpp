#include "nu/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace nu {

namespace {

bool images_identity(const std::vector<int>& img) {
  for (int i = 0; i < int(img.size()); ++i)
    if (img[i] != i) return false;
  return true;
}

int first_moved(const std::vector<int>& img) {
  for (int i = 0; i < int(img.size()); ++i)
    if (img[i] != i) return i;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<int> seed_base)
    : degree_(degree), seed_base_(std::move(seed_base)) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  for (int b : seed_base_) {
    if (b < 0 || b >= degree_) throw std::invalid_argument("seed base point out of range");
    Level lv;
    lv.base_point = b;
    lv.orbit = {b};
    lv.orbit_pos.assign(degree_, 0);
    lv.orbit_pos[b] = 1;
    lv.transversal.push_back(Permutation::identity(degree_).images());
    levels_.push_back(std::move(lv));
  }
}

PermGroup::PermGroup(int degree, const std::vector<Permutation>& generators,
                     std::vector<int> seed_base)
    : PermGroup(degree, std::move(seed_base)) {
  for (const auto& g : generators) add_generator(g);
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

void PermGroup::ensure_level_for(const std::vector<int>& moved_hint) {
  int b = first_moved(moved_hint);
  if (b < 0) throw std::logic_error("cannot extend base with an identity residue");
  Level lv;
  lv.base_point = b;
  lv.orbit = {b};
  lv.orbit_pos.assign(degree_, 0);
  lv.orbit_pos[b] = 1;
  lv.transversal.push_back(Permutation::identity(degree_).images());
  levels_.push_back(std::move(lv));
}

void PermGroup::recompute_orbit(int level) {
  Level& lv = levels_[level];
  lv.orbit.assign(1, lv.base_point);
  lv.orbit_pos.assign(degree_, 0);
  lv.orbit_pos[lv.base_point] = 1;
  lv.transversal.assign(1, Permutation::identity(degree_).images());
  for (size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    int delta = lv.orbit[pos];
    for (int gi : lv.gen_idx) {
      const auto& s = strong_gens_[gi].images();
      int gamma = s[delta];
      if (lv.orbit_pos[gamma]) continue;
      std::vector<int> t(degree_);
      const auto& td = lv.transversal[pos];
      for (int x = 0; x < degree_; ++x) t[x] = s[td[x]];
      lv.orbit_pos[gamma] = int(lv.orbit.size()) + 1;
      lv.orbit.push_back(gamma);
      lv.transversal.push_back(std::move(t));
    }
  }
}

int PermGroup::strip(std::vector<int>& buf, int from_level) const {
  std::vector<int> tinv(degree_), next(degree_);
  for (int lev = from_level; lev < int(levels_.size()); ++lev) {
    const Level& lv = levels_[lev];
    int beta = buf[lv.base_point];
    int pos = lv.orbit_pos[beta];
    if (pos == 0) return lev;
    const auto& t = lv.transversal[pos - 1];
    for (int x = 0; x < degree_; ++x) tinv[t[x]] = x;
    for (int x = 0; x < degree_; ++x) next[x] = tinv[buf[x]];
    buf.swap(next);
  }
  return int(levels_.size());
}

void PermGroup::close_level(int level) {
  recompute_orbit(level);
  Level& lv = levels_[level];
  std::vector<int> u(degree_);
  for (size_t pos = 0; pos < lv.orbit.size(); ++pos) {
    for (size_t sg = 0; sg < lv.gen_idx.size(); ++sg) {
      const auto& s = strong_gens_[lv.gen_idx[sg]].images();
      int delta = lv.orbit[pos];
      int gamma = s[delta];
      int gpos = lv.orbit_pos[gamma] - 1;
      // Schreier generator t_gamma^-1 * s * t_delta
      const auto& td = lv.transversal[pos];
      const auto& tg = lv.transversal[gpos];
      std::vector<int> tginv(degree_);
      for (int x = 0; x < degree_; ++x) tginv[tg[x]] = x;
      bool ident = true;
      for (int x = 0; x < degree_; ++x) {
        u[x] = tginv[s[td[x]]];
        if (u[x] != x) ident = false;
      }
      if (ident) continue;
      std::vector<int> residue = u;
      int lev2 = strip(residue, level + 1);
      if (lev2 == int(levels_.size())) {
        if (images_identity(residue)) continue;
        ensure_level_for(residue);
      }
      int idx = int(strong_gens_.size());
      strong_gens_.push_back(Permutation(residue));
      for (int l = level + 1; l <= lev2; ++l) levels_[l].gen_idx.push_back(idx);
      for (int l = lev2; l >= level + 1; --l) close_level(l);
    }
  }
}

bool PermGroup::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (g.is_identity()) return false;
  bool grew = !contains(g);
  input_gens_.push_back(g);
  if (!grew) return false;

  int m = 0;
  while (m < int(levels_.size()) && g(levels_[m].base_point) == levels_[m].base_point) ++m;
  if (m == int(levels_.size())) ensure_level_for(g.images());
  int idx = int(strong_gens_.size());
  strong_gens_.push_back(g);
  for (int l = 0; l <= m && l < int(levels_.size()); ++l) levels_[l].gen_idx.push_back(idx);
  for (int l = m; l >= 0; --l) {
    if (l < int(levels_.size())) close_level(l);
  }
  return true;
}

BigInt PermGroup::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_) o *= BigInt(lv.orbit.size());
  return o;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("membership degree mismatch");
  std::vector<int> buf = g.images();
  int lev = strip(buf, 0);
  return lev == int(levels_.size()) && images_identity(buf);
}

std::vector<long long> PermGroup::fundamental_orbit_sizes() const {
  std::vector<long long> out;
  for (const auto& lv : levels_) out.push_back((long long)lv.orbit.size());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> parent(degree_);
  for (int i = 0; i < degree_; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : input_gens_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> cells(degree_);
  for (int x = 0; x < degree_; ++x) cells[find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& c : cells)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbits().size() == 1; }

bool PermGroup::is_k_transitive(int k) const {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (degree_ < k) return false;
  bool prefix_ok = int(levels_.size()) >= k;
  for (int i = 0; prefix_ok && i < k; ++i) prefix_ok = levels_[i].base_point == i;
  if (!prefix_ok) {
    std::vector<int> seed(k);
    for (int i = 0; i < k; ++i) seed[i] = i;
    return PermGroup(degree_, input_gens_, seed).is_k_transitive(k);
  }
  for (int i = 0; i < k; ++i)
    if (int(levels_[i].orbit.size()) != degree_ - i) return false;
  return true;
}

PermGroup induced_action_on_sets(const PermGroup& g,
                                 const std::vector<std::vector<int>>& sets) {
  std::vector<std::pair<std::vector<int>, int>> index;
  index.reserve(sets.size());
  for (int i = 0; i < int(sets.size()); ++i) {
    std::vector<int> s = sets[i];
    std::sort(s.begin(), s.end());
    index.emplace_back(std::move(s), i);
  }
  std::sort(index.begin(), index.end());
  auto find_set = [&](const std::vector<int>& s) {
    auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(s, 0));
    if (it == index.end() || it->first != s) return -1;
    return it->second;
  };

  std::vector<Permutation> induced;
  for (const auto& gen : g.generators()) {
    std::vector<int> img(sets.size());
    for (int i = 0; i < int(sets.size()); ++i) {
      std::vector<int> mapped;
      mapped.reserve(sets[i].size());
      for (int x : sets[i]) mapped.push_back(gen(x));
      std::sort(mapped.begin(), mapped.end());
      int j = find_set(mapped);
      if (j < 0)
        throw std::invalid_argument("set list is not invariant under a group generator");
      img[i] = j;
    }
    induced.emplace_back(std::move(img));
  }
  return PermGroup(int(sets.size()), induced);
}

}  // namespace nu
