#include "periodica/magma.hpp"

#include <mutex>

#include "periodica/error.hpp"

namespace periodica {

struct FiniteMagma::Flags {
  std::once_flag assoc_once;
  bool associative = false;
  std::once_flag left_id_once;
  Subset left_ids;
  std::once_flag group_once;
  std::optional<Element> identity;
  bool group = false;
  std::vector<Element> inverses;
};

FiniteMagma::FiniteMagma(std::size_t n, std::vector<Element> table,
                         std::vector<std::string> labels)
    : n_(n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "a magma needs at least one element");
  if (table.size() != n * n) {
    fail(ErrorCode::InvalidInput, "Cayley table has " + std::to_string(table.size()) +
                                      " entries, expected " + std::to_string(n * n));
  }
  for (Element v : table) {
    if (v >= n) fail(ErrorCode::InvalidInput, "Cayley table entry " + std::to_string(v) + " out of range");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (labels.size() != n) {
    fail(ErrorCode::InvalidInput, "label count does not match the carrier size");
  }
  table_ptr_ = std::make_shared<const std::vector<Element>>(std::move(table));
  table_ = table_ptr_->data();
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
  flags_ = std::make_shared<Flags>();
}

std::optional<Element> FiniteMagma::find(const std::string& name) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*labels_)[i] == name) return static_cast<Element>(i);
  }
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos &&
      name.size() < 10) {
    auto v = std::stoul(name);
    if (v < n_) return static_cast<Element>(v);
  }
  return std::nullopt;
}

bool FiniteMagma::is_associative() const {
  std::call_once(flags_->assoc_once, [this] {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        Element xy = op(x, y);
        for (Element z = 0; z < n_; ++z) {
          if (op(xy, z) != op(x, op(y, z))) return;
        }
      }
    }
    flags_->associative = true;
  });
  return flags_->associative;
}

const Subset& FiniteMagma::left_identities() const {
  std::call_once(flags_->left_id_once, [this] {
    Subset ids(n_);
    for (Element l = 0; l < n_; ++l) {
      bool ok = true;
      for (Element y = 0; y < n_ && ok; ++y) ok = op(l, y) == y;
      if (ok) ids.insert(l);
    }
    flags_->left_ids = std::move(ids);
  });
  return flags_->left_ids;
}

std::optional<Element> FiniteMagma::identity() const {
  is_group();
  return flags_->identity;
}

bool FiniteMagma::is_group() const {
  std::call_once(flags_->group_once, [this] {
    const Subset& ids = left_identities();
    ids.for_each([&](Element l) {
      if (flags_->identity) return;
      bool right = true;
      for (Element y = 0; y < n_ && right; ++y) right = op(y, l) == y;
      if (right) flags_->identity = l;
    });
    if (!flags_->identity || !is_associative()) return;
    Element e = *flags_->identity;
    std::vector<Element> inv(n_, static_cast<Element>(n_));
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (op(x, y) == e && op(y, x) == e) {
          inv[x] = y;
          break;
        }
      }
      if (inv[x] == n_) return;
    }
    flags_->inverses = std::move(inv);
    flags_->group = true;
  });
  return flags_->group;
}

Element FiniteMagma::inverse(Element x) const {
  if (!is_group()) fail(ErrorCode::NotGroup, "inverse requested in a non-group");
  return flags_->inverses.at(x);
}

void FiniteMagma::check(const Subset& s) const {
  if (s.universe() != n_) {
    fail(ErrorCode::SizeMismatch, "subset over a universe of size " + std::to_string(s.universe()) +
                                      " used with a carrier of size " + std::to_string(n_));
  }
}

bool operator==(const FiniteMagma& a, const FiniteMagma& b) {
  return a.n_ == b.n_ && (a.table_ptr_ == b.table_ptr_ || *a.table_ptr_ == *b.table_ptr_);
}

FiniteMagma cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return FiniteMagma(n, std::move(t));
}

FiniteMagma multiplicative_cyclic(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>((x * y) % n);
  }
  return FiniteMagma(n, std::move(t));
}

FiniteMagma left_zero(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>(x);
  }
  return FiniteMagma(n, std::move(t));
}

FiniteMagma right_zero(std::size_t n) {
  std::vector<Element> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = static_cast<Element>(y);
  }
  return FiniteMagma(n, std::move(t));
}

FiniteMagma function_monoid(std::size_t k) {
  if (k == 0 || k > 4) fail(ErrorCode::InvalidInput, "function_monoid supports 1 <= k <= 4");
  std::vector<std::vector<Element>> maps;
  std::vector<Element> img(k, 0);
  while (true) {
    maps.push_back(img);
    std::size_t i = k;
    while (i > 0 && img[i - 1] == k - 1) img[--i] = 0;
    if (i == 0) break;
    ++img[i - 1];
  }
  auto bijective = [k](const std::vector<Element>& f) {
    std::vector<bool> seen(k, false);
    for (Element v : f) seen[v] = true;
    for (bool b : seen) {
      if (!b) return false;
    }
    return true;
  };
  std::vector<std::vector<Element>> ordered;
  for (const auto& f : maps) {
    if (bijective(f)) ordered.push_back(f);
  }
  for (const auto& f : maps) {
    if (!bijective(f)) ordered.push_back(f);
  }
  std::size_t n = ordered.size();
  auto index_of = [&](const std::vector<Element>& f) {
    for (std::size_t i = 0; i < n; ++i) {
      if (ordered[i] == f) return static_cast<Element>(i);
    }
    return static_cast<Element>(n);
  };
  std::vector<Element> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    std::string lbl;
    for (Element v : ordered[a]) lbl += std::to_string(v + 1);
    labels.push_back(lbl);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<Element> comp(k);
      for (std::size_t i = 0; i < k; ++i) comp[i] = ordered[a][ordered[b][i]];
      t[a * n + b] = index_of(comp);
    }
  }
  return FiniteMagma(n, std::move(t), std::move(labels));
}

FiniteMagma dihedral(std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidInput, "dihedral needs n >= 1");
  std::size_t order = 2 * n;
  std::vector<Element> t(order * order);
  auto idx = [n](bool refl, std::size_t rot) {
    return static_cast<Element>((refl ? n : 0) + rot % n);
  };
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    bool xs = x >= n;
    std::size_t a = x % n;
    labels.push_back((xs ? "sr" : "r") + std::to_string(a));
    for (std::size_t y = 0; y < order; ++y) {
      bool ys = y >= n;
      std::size_t b = y % n;
      // r^a r^b = r^(a+b); r^a s r^b = s r^(b-a); s r^a r^b = s r^(a+b); s r^a s r^b = r^(b-a)
      std::size_t rot = ys ? (b + n - a) : (a + b);
      t[x * order + y] = idx(xs != ys, rot);
    }
  }
  return FiniteMagma(order, std::move(t), std::move(labels));
}

FiniteMagma direct_product(const FiniteMagma& a, const FiniteMagma& b) {
  std::size_t na = a.size(), nb = b.size(), n = na * nb;
  std::vector<Element> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(static_cast<Element>(x / nb)) + "," +
                     b.label(static_cast<Element>(x % nb)) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      Element p = a.op(static_cast<Element>(x / nb), static_cast<Element>(y / nb));
      Element q = b.op(static_cast<Element>(x % nb), static_cast<Element>(y % nb));
      t[x * n + y] = static_cast<Element>(p * nb + q);
    }
  }
  return FiniteMagma(n, std::move(t), std::move(labels));
}

FiniteMagma with_identity(const FiniteMagma& x) {
  std::size_t n = x.size(), m = n + 1;
  std::vector<Element> t(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Element v;
      if (a == n) {
        v = static_cast<Element>(b);
      } else if (b == n) {
        v = static_cast<Element>(a);
      } else {
        v = x.op(static_cast<Element>(a), static_cast<Element>(b));
      }
      t[a * m + b] = v;
    }
  }
  std::vector<std::string> labels = x.labels();
  labels.push_back("1");
  return FiniteMagma(m, std::move(t), std::move(labels));
}

}  // namespace periodica
