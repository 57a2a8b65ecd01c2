#include "csg/symmetric.hpp"

#include <vector>

#include "csg/error.hpp"

namespace csg {

Perm face_perm(std::size_t i, const Perm& sigma) {
  const std::size_t n = sigma.level();
  if (n == 0) throw Error(ErrorKind::IndexOutOfRange, "face: level 0 has no faces");
  if (i > n) throw_index_out_of_range("face", i, n);
  const int target = static_cast<int>(i);
  const std::size_t source = static_cast<std::size_t>(sigma.inverse()(i));
  std::vector<int> out;
  out.reserve(n);
  for (std::size_t j = 0; j <= n; ++j) {
    if (j == source) continue;
    const int v = sigma(j);
    out.push_back(v > target ? v - 1 : v);
  }
  return PermBuilder::adopt(std::move(out));
}

Perm degeneracy_perm(std::size_t i, const Perm& sigma) {
  const std::size_t n = sigma.level();
  if (i > n) throw_index_out_of_range("degeneracy", i, n);
  const int target = static_cast<int>(i);
  const std::size_t source = static_cast<std::size_t>(sigma.inverse()(i));
  std::vector<int> out;
  out.reserve(n + 2);
  for (std::size_t j = 0; j <= n; ++j) {
    const int v = sigma(j);
    if (j == source) {
      out.push_back(target);
      out.push_back(target + 1);
    } else {
      out.push_back(v > target ? v + 1 : v);
    }
  }
  return PermBuilder::adopt(std::move(out));
}

Perm s_left_perm(const Perm& sigma) {
  std::vector<int> out;
  out.reserve(sigma.points() + 1);
  out.push_back(0);
  for (int v : sigma.images()) out.push_back(v + 1);
  return PermBuilder::adopt(std::move(out));
}

Perm s_right_perm(const Perm& sigma) {
  std::vector<int> out(sigma.images().begin(), sigma.images().end());
  out.push_back(static_cast<int>(sigma.points()));
  return PermBuilder::adopt(std::move(out));
}

Perm block_substitute(const Perm& sigma, std::size_t i, const Perm& tau) {
  const std::size_t n = sigma.level();
  const std::size_t m = tau.level();
  if (i > n) throw_index_out_of_range("block_substitute", i, n);
  const int shift = static_cast<int>(m);
  const int target = static_cast<int>(i);
  const std::size_t a = static_cast<std::size_t>(sigma.inverse()(i));
  auto lift = [&](int v) { return v > target ? v + shift : v; };
  std::vector<int> out(n + m + 1);
  for (std::size_t p = 0; p < out.size(); ++p) {
    if (p < a) {
      out[p] = lift(sigma(p));
    } else if (p <= a + m) {
      out[p] = target + tau(p - a);
    } else {
      out[p] = lift(sigma(p - m));
    }
  }
  return PermBuilder::adopt(std::move(out));
}

namespace {

int preimage(const Perm& sigma, std::size_t v) { return sigma.inverse()(v); }

}  // namespace

bool preimage_case1(const Perm& sigma, std::size_t i, std::size_t j) {
  const int si = preimage(sigma, i);
  const int sj = preimage(sigma, j);
  const int lhs = face_perm(i, sigma).inverse()(j - 1);
  return lhs == (si < sj ? sj - 1 : sj);
}

bool preimage_case2(const Perm& sigma, std::size_t i, std::size_t j) {
  const int si = preimage(sigma, i);
  const int sj = preimage(sigma, j);
  const int lhs = face_perm(j, sigma).inverse()(i);
  return lhs == (sj < si ? si - 1 : si);
}

bool preimage_case3(const Perm& sigma, std::size_t i, std::size_t j) {
  const int si = preimage(sigma, i);
  const int sj = preimage(sigma, j);
  const int lhs = degeneracy_perm(j, sigma).inverse()(i);
  return lhs == (sj < si ? si + 1 : si);
}

bool preimage_case4(const Perm& sigma, const Perm& tau, std::size_t i, std::size_t j) {
  const int lhs = block_substitute(sigma, i, tau).inverse()(i + j);
  return lhs == preimage(sigma, i) + preimage(tau, j);
}

bool preimage_case5(const Perm& sigma, std::size_t i, std::size_t j) {
  const int si = preimage(sigma, i);
  const int sj = preimage(sigma, j);
  const int lhs = degeneracy_perm(i, sigma).inverse()(j + 1);
  return lhs == (sj < si ? sj : sj + 1);
}

}  // namespace csg
