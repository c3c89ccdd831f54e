#include "klein4/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace klein4 {

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("cartan type too short: '" + s + "'");
  char c = char(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("cartan type must be a letter followed by a rank: '" + s + "'");
  int n = std::stoi(s.substr(1));
  CartanType t{c, n};
  auto bad = [&](const char* why) {
    throw std::invalid_argument("invalid cartan type '" + s + "': " + why);
  };
  switch (c) {
    case 'A': if (n < 1) bad("A requires rank >= 1"); break;
    case 'B': if (n < 2) bad("B requires rank >= 2"); break;
    case 'C': if (n < 2) bad("C requires rank >= 2"); break;
    case 'D': if (n < 4) bad("D requires rank >= 4"); break;
    case 'E': if (n < 6 || n > 8) bad("E exists for rank 6, 7, 8"); break;
    case 'F': if (n != 4) bad("F exists for rank 4"); break;
    case 'G': if (n != 2) bad("G exists for rank 2"); break;
    default: bad("series must be one of A B C D E F G");
  }
  return t;
}

std::string CartanType::str() const {
  return std::string(1, series) + std::to_string(rank);
}

void RootSystem::build_cartan() {
  int n = type_.rank;
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto edge = [&](int i, int j) { cartan_[i][j] = -1; cartan_[j][i] = -1; };
  switch (type_.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      cartan_[n - 2][n - 1] = -2;
      break;
    case 'C':
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      cartan_[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      // nodes 1-3-4-5-6(-7(-8)) in a chain, node 2 attached to node 4
      edge(0, 2); edge(2, 3); edge(3, 4); edge(4, 5);
      edge(1, 3);
      if (n >= 7) edge(5, 6);
      if (n == 8) edge(6, 7);
      break;
    case 'F':
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1); edge(1, 2); edge(2, 3);
      cartan_[1][2] = -2;
      break;
    case 'G':
      // alpha_1 short, alpha_2 long
      cartan_[0][1] = -1;
      cartan_[1][0] = -3;
      break;
  }
}

int RootSystem::height(const RootVec& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

int RootSystem::pairing_with_simple_coroot(const RootVec& a, int j) const {
  int s = 0;
  for (int i = 0; i < type_.rank; ++i) s += a[i] * cartan_[i][j];
  return s;
}

long RootSystem::pairing_with_coweight(const RootVec& a, const std::vector<long>& h) const {
  long s = 0;
  for (int i = 0; i < type_.rank; ++i) s += long(a[i]) * h[i];
  return s;
}

void RootSystem::enumerate_positives() {
  int n = type_.rank;
  std::map<RootVec, int> seen;  // value unused during enumeration
  std::vector<RootVec> frontier;
  for (int i = 0; i < n; ++i) {
    RootVec a(n, 0);
    a[i] = 1;
    seen.emplace(a, 0);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootVec> next;
    for (const auto& a : frontier) {
      for (int j = 0; j < n; ++j) {
        // p = how far the string through a extends downward along alpha_j
        RootVec down = a;
        int p = 0;
        while (true) {
          down[j] -= 1;
          bool neg = std::any_of(down.begin(), down.end(), [](int c) { return c < 0; });
          if (neg || !seen.count(down)) break;
          ++p;
        }
        int q = p - pairing_with_simple_coroot(a, j);
        if (q <= 0) continue;
        RootVec up = a;
        up[j] += 1;
        if (seen.emplace(up, 0).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }
  positive_.clear();
  for (const auto& kv : seen) positive_.push_back(kv.first);
  std::sort(positive_.begin(), positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  index_.clear();
  for (int i = 0; i < int(positive_.size()); ++i) index_[positive_[i]] = i;

  int top = max_height();
  std::vector<const RootVec*> tops;
  for (const auto& a : positive_)
    if (height(a) == top) tops.push_back(&a);
  if (tops.size() != 1)
    throw std::logic_error("root enumeration produced " + std::to_string(tops.size()) +
                           " roots of maximal height in " + type_.str());
  highest_ = *tops[0];
}

RootSystem::RootSystem(const CartanType& t) : type_(t) {
  build_cartan();
  enumerate_positives();
}

int RootSystem::max_height() const { return height(positive_.back()); }

bool RootSystem::is_root(const RootVec& a) const {
  if (positive_index(a) >= 0) return true;
  RootVec neg(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return positive_index(neg) >= 0;
}

int RootSystem::positive_index(const RootVec& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

RootVec RootSystem::reflect_simple(const RootVec& a, int j) const {
  RootVec r = a;
  r[j] -= pairing_with_simple_coroot(a, j);
  return r;
}

void RootSystem::root_string(const RootVec& a, const RootVec& b, int& p, int& q) const {
  p = 0;
  q = 0;
  RootVec c = b;
  while (true) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= a[i];
    if (!is_root(c)) break;
    ++p;
  }
  c = b;
  while (true) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += a[i];
    if (!is_root(c)) break;
    ++q;
  }
}

std::vector<int> RootSystem::diagram_involution() const {
  int n = type_.rank;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  if (type_.series == 'A' && n >= 2) {
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  } else if (type_.series == 'D') {
    std::swap(perm[n - 2], perm[n - 1]);
  } else if (type_.series == 'E' && n == 6) {
    perm = {5, 1, 4, 3, 2, 0};
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan_[perm[i]][perm[j]] != cartan_[i][j])
        throw std::logic_error("diagram involution does not preserve the Cartan matrix of " +
                               type_.str());
  return perm;
}

}  // namespace klein4
