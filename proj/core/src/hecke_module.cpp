#include "glhecke/hecke_module.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace glhecke {

namespace {

// s_i on a basis vector is a signed basis vector.
struct SignedImage {
  int target;
  int sign;
};

std::vector<int> positions(const Permutation& w) {
  std::vector<int> pos(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) pos[w[p]] = static_cast<int>(p);
  return pos;
}

// Smallest i with i+1 left of i, i.e. l(s_i w) < l(w); -1 for the identity.
int first_left_descent(const Permutation& w) {
  const auto pos = positions(w);
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
    if (pos[i + 1] < pos[i]) return i;
  }
  return -1;
}

Permutation left_multiply(int i, Permutation w) {
  for (auto& v : w) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return w;
}

std::vector<int> block_of_position(const std::vector<int>& composition) {
  std::vector<int> out;
  for (std::size_t b = 0; b < composition.size(); ++b) out.insert(out.end(), composition[b], static_cast<int>(b));
  return out;
}

std::vector<Permutation> coset_representatives(const std::vector<int>& composition) {
  int k = 0;
  for (int c : composition) k += c;
  std::vector<int> start;
  for (std::size_t b = 0, acc = 0; b < composition.size(); acc += composition[b], ++b) start.push_back(static_cast<int>(acc));
  std::vector<Permutation> out;
  Permutation w(k, -1);
  std::vector<int> filled(composition.size(), 0);
  std::function<void(int)> place = [&](int value) {
    if (value == k) {
      out.push_back(w);
      return;
    }
    for (std::size_t b = 0; b < composition.size(); ++b) {
      if (filled[b] == composition[b]) continue;
      w[start[b] + filled[b]] = value;
      ++filled[b];
      place(value + 1);
      --filled[b];
    }
  };
  place(0);
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    const int la = permutation_length(a);
    const int lb = permutation_length(b);
    return la != lb ? la < lb : a < b;
  });
  return out;
}

Vector apply_signed(const std::vector<SignedImage>& action, const Vector& x) {
  Vector out(x.size());
  for (std::size_t u = 0; u < x.size(); ++u) {
    if (x[u].is_zero()) continue;
    const auto& img = action[u];
    if (img.sign > 0) {
      out[img.target] += x[u];
    } else {
      out[img.target] -= x[u];
    }
  }
  return out;
}

int pairing(int i, int j) {
  if (j == i) return 1;
  if (j == i + 1) return -1;
  return 0;
}

int reflect_index(int i, int j) {
  if (j == i) return i + 1;
  if (j == i + 1) return i;
  return j;
}

std::string gen_name(char letter, int i) { return std::string(1, letter) + std::to_string(i + 1); }

Matrix inverse(const Matrix& a) {
  const int n = a.rows();
  Matrix aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Scalar(1);
  }
  auto ech = row_echelon(std::move(aug));
  if (ech.rank() < n || ech.pivots[n - 1] != n - 1) throw std::invalid_argument("singular matrix");
  Matrix inv(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

// All generator matrices, s's first.
std::vector<const Matrix*> generators(const ModuleMatrices& m) {
  std::vector<const Matrix*> out;
  for (const auto& s : m.s) out.push_back(&s);
  for (const auto& e : m.eps) out.push_back(&e);
  return out;
}

void expect_compatible(const StandardModule& a, const StandardModule& b) {
  if (a.k() != b.k()) throw std::invalid_argument("modules for different k");
}

}  // namespace

int permutation_length(const Permutation& w) {
  int inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a) {
    for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
  }
  return inv;
}

std::vector<int> reduced_word(const Permutation& w) {
  std::vector<int> word;
  Permutation cur = w;
  for (int i = first_left_descent(cur); i >= 0; i = first_left_descent(cur)) {
    word.push_back(i);
    cur = left_multiply(i, cur);
  }
  return word;
}

std::vector<int> StandardModule::composition() const {
  std::vector<int> out;
  for (const auto& seg : param_.segments()) out.push_back(seg.len());
  return out;
}

int StandardModule::index_of(const Permutation& w) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), w, [](const Permutation& a, const Permutation& b) {
    const int la = permutation_length(a);
    const int lb = permutation_length(b);
    return la != lb ? la < lb : a < b;
  });
  if (it == basis_.end() || *it != w) return -1;
  return static_cast<int>(it - basis_.begin());
}

StandardModule StandardModule::build(const Multisegment& ordered) {
  if (ordered.segments().empty()) throw std::invalid_argument("empty multisegment");
  StandardModule m;
  m.param_ = ordered;
  m.weight_ = block_coordinates(ordered);
  const auto comp = m.composition();
  const int k = ordered.total_length();
  m.basis_ = coset_representatives(comp);
  const int d = m.dim();
  const auto block = block_of_position(comp);

  std::map<Permutation, int> index;
  for (int u = 0; u < d; ++u) index[m.basis_[u]] = u;

  std::vector<std::vector<SignedImage>> s_action(k > 0 ? k - 1 : 0, std::vector<SignedImage>(d));
  for (int i = 0; i + 1 < k; ++i) {
    for (int u = 0; u < d; ++u) {
      const auto pos = positions(m.basis_[u]);
      if (block[pos[i]] == block[pos[i + 1]]) {
        // s_i w = w s_j with s_j inside the Young subgroup, which acts by -1.
        s_action[i][u] = {u, -1};
      } else {
        s_action[i][u] = {index.at(left_multiply(i, m.basis_[u])), 1};
      }
    }
  }

  // x[j][u] = eps_j applied to basis vector u, by induction on length:
  // eps_j s_i w' = s_i s_i(eps_j) w' + <alpha_i, eps_j> w'.
  std::vector<std::vector<Vector>> x(k, std::vector<Vector>(d));
  for (int u = 0; u < d; ++u) {
    const auto& w = m.basis_[u];
    const int i = first_left_descent(w);
    if (i < 0) {
      for (int j = 0; j < k; ++j) {
        x[j][u] = Vector(d);
        x[j][u][u] = m.weight_[j];
      }
      continue;
    }
    const int prev = index.at(left_multiply(i, w));
    for (int j = 0; j < k; ++j) {
      Vector v = apply_signed(s_action[i], x[reflect_index(i, j)][prev]);
      if (const int c = pairing(i, j); c != 0) v[prev] += Scalar(c);
      x[j][u] = std::move(v);
    }
  }

  m.matrices_.k = k;
  for (int i = 0; i + 1 < k; ++i) {
    Matrix s(d, d);
    for (int u = 0; u < d; ++u) s(s_action[i][u].target, u) = Scalar(s_action[i][u].sign);
    m.matrices_.s.push_back(std::move(s));
  }
  for (int j = 0; j < k; ++j) m.matrices_.eps.push_back(Matrix::from_columns(x[j], d));
  return m;
}

StandardModule build_standard_module(const HeckeParam& hp) { return StandardModule::build(hp.multisegment()); }
StandardModule build_standard_module(const Multisegment& ordered) { return StandardModule::build(ordered); }

RelationCheck check_relations(const ModuleMatrices& m) {
  RelationCheck out;
  const int d = m.dim();
  const int k = m.k;
  const Matrix id = Matrix::identity(d);
  auto fail = [&](std::string what) {
    out.ok = false;
    out.failures.push_back(std::move(what));
  };
  if (static_cast<int>(m.eps.size()) != k || static_cast<int>(m.s.size()) != std::max(k - 1, 0)) {
    fail("wrong number of generators");
    return out;
  }
  for (int i = 0; i + 1 < k; ++i) {
    if (m.s[i] * m.s[i] != id) fail(gen_name('s', i) + "^2 != 1");
    for (int j = i + 1; j + 1 < k; ++j) {
      if (j == i + 1) {
        if (m.s[i] * m.s[j] * m.s[i] != m.s[j] * m.s[i] * m.s[j]) {
          fail("braid " + gen_name('s', i) + gen_name('s', j));
        }
      } else if (m.s[i] * m.s[j] != m.s[j] * m.s[i]) {
        fail(gen_name('s', i) + " and " + gen_name('s', j) + " do not commute");
      }
    }
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (m.eps[a] * m.eps[b] != m.eps[b] * m.eps[a]) {
        fail(gen_name('e', a) + " and " + gen_name('e', b) + " do not commute");
      }
    }
  }
  for (int i = 0; i + 1 < k; ++i) {
    for (int j = 0; j < k; ++j) {
      Matrix lhs = m.s[i] * m.eps[j] - m.eps[reflect_index(i, j)] * m.s[i];
      if (lhs != Matrix::scalar(d, Scalar(pairing(i, j)))) {
        fail("cross relation " + gen_name('s', i) + " " + gen_name('e', j));
      }
    }
  }
  return out;
}

bool verify_relations(const ModuleMatrices& m) { return check_relations(m).ok; }

std::vector<Scalar> elementary_symmetric(const std::vector<Scalar>& values) {
  std::vector<Scalar> e(values.size() + 1);
  e[0] = Scalar(1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    for (std::size_t d = j + 1; d >= 1; --d) e[d] += values[j] * e[d - 1];
  }
  e.erase(e.begin());
  return e;
}

CentralCharacterCheck central_character_of_module(const StandardModule& m) {
  CentralCharacterCheck out;
  out.chi = m.inducing_weight();
  std::sort(out.chi.begin(), out.chi.end(), std::greater<>());
  const auto expected = elementary_symmetric(out.chi);
  const int k = m.k();
  const int d = m.dim();
  const auto& eps = m.matrices().eps;
  std::vector<Matrix> e(k + 1, Matrix(d, d));
  e[0] = Matrix::identity(d);
  for (int j = 0; j < k; ++j) {
    for (int deg = j + 1; deg >= 1; --deg) e[deg] += eps[j] * e[deg - 1];
  }
  for (int deg = 1; deg <= k; ++deg) {
    auto c = e[deg].as_scalar();
    if (!c) {
      out.failure = "e" + std::to_string(deg) + " does not act by a scalar";
      return out;
    }
    out.elementary.push_back(*c);
    if (*c != expected[deg - 1]) {
      out.failure = "e" + std::to_string(deg) + " acts by " + c->str() + ", expected " + expected[deg - 1].str();
      return out;
    }
  }
  out.ok = true;
  return out;
}

IntertwinerSpace intertwiner_space(const StandardModule& from, const StandardModule& to) {
  expect_compatible(from, to);
  const int k = from.k();
  const int d2 = to.dim();
  const auto& mt = to.matrices();
  const auto block = block_of_position(from.composition());
  const Matrix id = Matrix::identity(d2);

  std::vector<Matrix> constraints;
  for (int i = 0; i + 1 < k; ++i) {
    if (block[i] == block[i + 1]) constraints.push_back(mt.s[i] + id);
  }
  for (int j = 0; j < k; ++j) constraints.push_back(mt.eps[j] - Matrix::scalar(d2, from.inducing_weight()[j]));

  // Accumulate the row space of all constraints, reducing after each block.
  Matrix acc(0, d2);
  for (const auto& c : constraints) {
    Matrix stacked(acc.rows() + c.rows(), d2);
    for (int r = 0; r < acc.rows(); ++r) {
      for (int col = 0; col < d2; ++col) stacked(r, col) = acc(r, col);
    }
    for (int r = 0; r < c.rows(); ++r) {
      for (int col = 0; col < d2; ++col) stacked(acc.rows() + r, col) = c(r, col);
    }
    auto ech = row_echelon(std::move(stacked));
    acc = Matrix(ech.rank(), d2);
    for (int r = 0; r < ech.rank(); ++r) {
      for (int col = 0; col < d2; ++col) acc(r, col) = ech.reduced(r, col);
    }
  }
  std::vector<Vector> generators_image;
  if (acc.rows() == 0) {
    for (int u = 0; u < d2; ++u) generators_image.push_back(id.column(u));
  } else {
    generators_image = nullspace(acc);
  }

  IntertwinerSpace out;
  const auto gens_from = generators(from.matrices());
  const auto gens_to = generators(mt);
  for (const auto& x : generators_image) {
    std::vector<Vector> cols(from.dim());
    for (int u = 0; u < from.dim(); ++u) {
      const auto& w = from.basis()[u];
      const int i = first_left_descent(w);
      if (i < 0) {
        cols[u] = x;
      } else {
        cols[u] = mt.s[i].apply(cols[from.index_of(left_multiply(i, w))]);
      }
    }
    Matrix t = Matrix::from_columns(cols, d2);
    for (std::size_t g = 0; g < gens_from.size(); ++g) {
      if (t * *gens_from[g] != *gens_to[g] * t) {
        throw std::logic_error("reconstructed map fails to intertwine generator " + std::to_string(g));
      }
    }
    out.basis.push_back(std::move(t));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

IntertwinerSpace intertwiner_space_direct(const StandardModule& from, const StandardModule& to) {
  expect_compatible(from, to);
  const int d1 = from.dim();
  const int d2 = to.dim();
  const auto gens_from = generators(from.matrices());
  const auto gens_to = generators(to.matrices());
  const int unknowns = d1 * d2;
  const auto var = [d1](int r, int c) { return r * d1 + c; };
  Matrix system(static_cast<int>(gens_from.size()) * unknowns, unknowns);
  int row = 0;
  for (std::size_t g = 0; g < gens_from.size(); ++g) {
    const Matrix& a = *gens_from[g];
    const Matrix& b = *gens_to[g];
    for (int r = 0; r < d2; ++r) {
      for (int c = 0; c < d1; ++c, ++row) {
        // (T A - B T)_{rc}
        for (int q = 0; q < d1; ++q) {
          if (!a(q, c).is_zero()) system(row, var(r, q)) += a(q, c);
        }
        for (int q = 0; q < d2; ++q) {
          if (!b(r, q).is_zero()) system(row, var(q, c)) -= b(r, q);
        }
      }
    }
  }
  IntertwinerSpace out;
  for (const auto& v : nullspace(system)) {
    Matrix t(d2, d1);
    for (int r = 0; r < d2; ++r) {
      for (int c = 0; c < d1; ++c) t(r, c) = v[var(r, c)];
    }
    out.basis.push_back(std::move(t));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

QuotientModule irreducible_quotient(const HeckeParam& hp) {
  const auto source = build_standard_module(hp);
  const auto target = build_standard_module(hp.multisegment().reversed());
  const auto hom = intertwiner_space(source, target);
  if (hom.dimension != 1) {
    throw std::runtime_error("intertwiner space for " + hp.str() + " has dimension " +
                             std::to_string(hom.dimension) + ", expected 1");
  }
  const Matrix& t = hom.basis.front();
  const auto cols = independent_columns(t);
  const int r = static_cast<int>(cols.size());
  const int d2 = target.dim();

  Matrix image(d2, r);
  for (int c = 0; c < r; ++c) {
    for (int row = 0; row < d2; ++row) image(row, c) = t(row, cols[c]);
  }
  // Coordinates on the image through an invertible r x r minor.
  const auto rows = independent_columns(image.transpose());
  Matrix minor(r, r);
  for (int a = 0; a < r; ++a) {
    for (int c = 0; c < r; ++c) minor(a, c) = image(rows[a], c);
  }
  const Matrix minor_inv = inverse(minor);
  auto restrict = [&](const Matrix& g) {
    const Matrix moved = g * image;
    Matrix picked(r, r);
    for (int a = 0; a < r; ++a) {
      for (int c = 0; c < r; ++c) picked(a, c) = moved(rows[a], c);
    }
    Matrix induced = minor_inv * picked;
    if (image * induced != moved) throw std::logic_error("image of the intertwiner is not a submodule");
    return induced;
  };

  QuotientModule out;
  out.dim = r;
  out.intertwiner_dimension = hom.dimension;
  out.matrices.k = hp.k();
  for (const auto& s : target.matrices().s) out.matrices.s.push_back(restrict(s));
  for (const auto& e : target.matrices().eps) out.matrices.eps.push_back(restrict(e));
  return out;
}

Rational young_sign_multiplicity(const ModuleMatrices& m, const std::vector<int>& composition) {
  const auto block = block_of_position(composition);
  if (static_cast<int>(block.size()) != m.k) throw std::invalid_argument("composition does not sum to k");
  std::vector<int> gens;
  for (int i = 0; i + 1 < m.k; ++i) {
    if (block[i] == block[i + 1]) gens.push_back(i);
  }
  Permutation id(m.k);
  for (int i = 0; i < m.k; ++i) id[i] = i;
  std::map<Permutation, std::pair<Matrix, int>> elements;
  elements.emplace(id, std::make_pair(Matrix::identity(m.dim()), 1));
  std::vector<Permutation> frontier{id};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& u : frontier) {
      const auto& [mat, sign] = elements.at(u);
      for (int i : gens) {
        Permutation v = u;
        std::swap(v[i], v[i + 1]);
        if (elements.count(v)) continue;
        elements.emplace(v, std::make_pair(mat * m.s[i], -sign));
        next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  Rational total;
  for (const auto& [u, entry] : elements) {
    const auto& [mat, sign] = entry;
    Scalar tr;
    for (int a = 0; a < mat.rows(); ++a) tr += mat(a, a);
    if (!tr.is_real()) throw std::logic_error("non-real character value of a permutation");
    total += sign > 0 ? tr.re() : -tr.re();
  }
  return total / Rational(static_cast<std::int64_t>(elements.size()));
}

}  // namespace glhecke
