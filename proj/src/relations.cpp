#include "relations.hpp"

#include <algorithm>
#include <bit>

namespace difun {

namespace {

void check_ground_set(int n) {
  if (n < 1 || n > kMaxGroundSet) {
    throw DimensionError("ground-set size must be in [1, 16], got " +
                         std::to_string(n));
  }
}

void check_same_n(int a, int b) {
  if (a != b) {
    throw DimensionError("mismatched ground-set sizes " + std::to_string(a) +
                         " and " + std::to_string(b));
  }
}

void check_element(int n, int x) {
  if (x < 1 || x > n) {
    throw DomainError("element " + std::to_string(x) +
                      " outside ground set {1.." + std::to_string(n) + "}");
  }
}

}  // namespace

Mask full_mask(int n) { return (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1); }

int popcount(Mask m) { return std::popcount(m); }

int min_element(Mask m) { return std::countr_zero(m) + 1; }

BinaryRelation::BinaryRelation(int n) : n_(n) { check_ground_set(n); }

BinaryRelation BinaryRelation::from_pairs(
    int n, const std::vector<std::pair<int, int>>& pairs) {
  BinaryRelation rel(n);
  for (auto [x, y] : pairs) rel.add(x, y);
  return rel;
}

BinaryRelation BinaryRelation::identity(int n) {
  BinaryRelation rel(n);
  for (int x = 1; x <= n; ++x) rel.add(x, x);
  return rel;
}

BinaryRelation BinaryRelation::full(int n) {
  BinaryRelation rel(n);
  for (int x = 1; x <= n; ++x) rel.rows_[x - 1] = full_mask(n);
  return rel;
}

bool BinaryRelation::contains(int x, int y) const {
  check_element(n_, x);
  check_element(n_, y);
  return (rows_[x - 1] >> (y - 1)) & 1u;
}

void BinaryRelation::add(int x, int y) {
  check_element(n_, x);
  check_element(n_, y);
  rows_[x - 1] |= Mask{1} << (y - 1);
}

Mask BinaryRelation::row(int x) const {
  check_element(n_, x);
  return rows_[x - 1];
}

Mask BinaryRelation::column(int y) const {
  check_element(n_, y);
  Mask col = 0;
  for (int x = 1; x <= n_; ++x) {
    col |= ((rows_[x - 1] >> (y - 1)) & 1u) << (x - 1);
  }
  return col;
}

bool BinaryRelation::empty() const {
  for (int x = 1; x <= n_; ++x) {
    if (rows_[x - 1] != 0) return false;
  }
  return true;
}

std::size_t BinaryRelation::pair_count() const {
  std::size_t count = 0;
  for (int x = 1; x <= n_; ++x) count += static_cast<std::size_t>(popcount(rows_[x - 1]));
  return count;
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(pair_count());
  for (int x = 1; x <= n_; ++x) {
    for (Mask m = rows_[x - 1]; m != 0; m &= m - 1) {
      out.emplace_back(x, min_element(m & (~m + 1)));
    }
  }
  return out;
}

SetPartition::SetPartition(int n) : n_(n) { check_ground_set(n); }

SetPartition SetPartition::from_masks(int n, std::vector<Mask> blocks) {
  SetPartition p(n);
  Mask seen = 0;
  for (Mask b : blocks) {
    if (b == 0) throw DomainError("partition blocks must be nonempty");
    if ((b & ~full_mask(n)) != 0) {
      throw DomainError("partition block leaves the ground set {1.." +
                        std::to_string(n) + "}");
    }
    if ((b & seen) != 0) throw DomainError("partition blocks must be disjoint");
    seen |= b;
  }
  std::sort(blocks.begin(), blocks.end(),
            [](Mask a, Mask b) { return min_element(a) < min_element(b); });
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::from_blocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Mask> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    Mask m = 0;
    for (int x : block) {
      check_element(n, x);
      m |= Mask{1} << (x - 1);
    }
    if (static_cast<int>(block.size()) != popcount(m)) {
      throw DomainError("partition block lists an element twice");
    }
    masks.push_back(m);
  }
  return from_masks(n, std::move(masks));
}

SetPartition SetPartition::singletons(int n, int k) {
  if (k < 0 || k > n) throw DomainError("singleton prefix out of range");
  std::vector<Mask> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) blocks.push_back(Mask{1} << i);
  return from_masks(n, std::move(blocks));
}

Mask SetPartition::support() const {
  Mask m = 0;
  for (Mask b : blocks_) m |= b;
  return m;
}

int SetPartition::block_of(int x) const {
  check_element(n_, x);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if ((blocks_[i] >> (x - 1)) & 1u) return static_cast<int>(i);
  }
  return -1;
}

DifunRelation::DifunRelation(int n, SetPartition kernel, SetPartition cokernel,
                             std::vector<int> pairing)
    : n_(n),
      kernel_(std::move(kernel)),
      cokernel_(std::move(cokernel)),
      pairing_(std::move(pairing)) {}

DifunRelation DifunRelation::empty(int n) {
  return DifunRelation(n, SetPartition(n), SetPartition(n), {});
}

DifunRelation DifunRelation::identity(int n) {
  std::vector<int> pairing(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pairing[static_cast<std::size_t>(i)] = i;
  return DifunRelation(n, SetPartition::singletons(n, n),
                       SetPartition::singletons(n, n), std::move(pairing));
}

DifunRelation DifunRelation::make(SetPartition kernel, SetPartition cokernel,
                                  std::vector<int> pairing) {
  check_same_n(kernel.n(), cokernel.n());
  const int r = kernel.block_count();
  if (cokernel.block_count() != r) {
    throw DomainError("kernel and cokernel must have the same block count");
  }
  if (static_cast<int>(pairing.size()) != r) {
    throw DomainError("pairing length must equal the block count");
  }
  std::vector<bool> hit(static_cast<std::size_t>(r), false);
  for (int im : pairing) {
    if (im < 0 || im >= r || hit[static_cast<std::size_t>(im)]) {
      throw DomainError("pairing must be a permutation of cokernel indices");
    }
    hit[static_cast<std::size_t>(im)] = true;
  }
  return DifunRelation(kernel.n(), std::move(kernel), std::move(cokernel),
                       std::move(pairing));
}

DifunRelation DifunRelation::from_block_pairs(
    int n, const std::vector<std::pair<Mask, Mask>>& rectangles) {
  std::vector<std::pair<Mask, Mask>> rects = rectangles;
  std::sort(rects.begin(), rects.end(), [](const auto& a, const auto& b) {
    return min_element(a.first) < min_element(b.first);
  });
  std::vector<Mask> kernel_blocks, image_blocks;
  kernel_blocks.reserve(rects.size());
  image_blocks.reserve(rects.size());
  for (const auto& [a, b] : rects) {
    if (a == 0 || b == 0) throw DomainError("rectangle sides must be nonempty");
    kernel_blocks.push_back(a);
    image_blocks.push_back(b);
  }
  auto kernel = SetPartition::from_masks(n, kernel_blocks);
  auto cokernel = SetPartition::from_masks(n, image_blocks);
  std::vector<int> pairing(rects.size());
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& blocks = cokernel.blocks();
    auto it = std::find(blocks.begin(), blocks.end(), image_blocks[i]);
    pairing[i] = static_cast<int>(it - blocks.begin());
  }
  return DifunRelation(n, std::move(kernel), std::move(cokernel),
                       std::move(pairing));
}

std::strong_ordering operator<=>(const DifunRelation& a,
                                 const DifunRelation& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rank() <=> b.rank(); c != 0) return c;
  if (auto c = a.kernel_ <=> b.kernel_; c != 0) return c;
  if (auto c = a.cokernel_ <=> b.cokernel_; c != 0) return c;
  return a.pairing_ <=> b.pairing_;
}

std::size_t hash_value(const DifunRelation& d) {
  std::size_t h = static_cast<std::size_t>(d.n());
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (int i = 0; i < d.rank(); ++i) {
    mix(d.kernel().block(i));
    mix(d.image_block(i));
  }
  return h;
}

BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b) {
  check_same_n(a.n(), b.n());
  const int n = a.n();
  BinaryRelation out(n);
  for (int x = 1; x <= n; ++x) {
    Mask image = 0;
    for (Mask m = a.row(x); m != 0; m &= m - 1) {
      image |= b.row(min_element(m & (~m + 1)));
    }
    for (Mask m = image; m != 0; m &= m - 1) {
      out.add(x, min_element(m & (~m + 1)));
    }
  }
  return out;
}

BinaryRelation diamond(const BinaryRelation& a, const BinaryRelation& b) {
  check_same_n(a.n(), b.n());
  const int n = a.n();
  std::array<Mask, kMaxGroundSet> cols{};
  for (int y = 1; y <= n; ++y) cols[static_cast<std::size_t>(y - 1)] = b.column(y);
  BinaryRelation out(n);
  for (int x = 1; x <= n; ++x) {
    const Mask image = a.row(x);
    if (image == 0) continue;
    for (int y = 1; y <= n; ++y) {
      if (cols[static_cast<std::size_t>(y - 1)] == image) out.add(x, y);
    }
  }
  return out;
}

BinaryRelation inverse(const BinaryRelation& a) {
  const int n = a.n();
  BinaryRelation out(n);
  for (int y = 1; y <= n; ++y) {
    for (Mask m = a.column(y); m != 0; m &= m - 1) {
      out.add(y, min_element(m & (~m + 1)));
    }
  }
  return out;
}

bool is_difunctional(const BinaryRelation& a) {
  return compose(compose(a, inverse(a)), a) == a;
}

DifunRelation to_canonical(const BinaryRelation& a) {
  const int n = a.n();
  // Group domain elements by identical row image; for a difunctional
  // relation these images are exactly the cokernel blocks.
  std::vector<std::pair<Mask, Mask>> rects;  // (kernel block, image block)
  for (int x = 1; x <= n; ++x) {
    const Mask image = a.row(x);
    if (image == 0) continue;
    bool found = false;
    for (auto& [block, img] : rects) {
      if (img == image) {
        block |= Mask{1} << (x - 1);
        found = true;
        break;
      }
    }
    if (!found) rects.emplace_back(Mask{1} << (x - 1), image);
  }
  // Distinct images must be disjoint, otherwise the relation is not
  // difunctional; report a witness pair from alpha∘alpha⁻¹∘alpha \ alpha.
  Mask seen = 0;
  bool overlap = false;
  for (const auto& [block, img] : rects) {
    if ((img & seen) != 0) {
      overlap = true;
      break;
    }
    seen |= img;
  }
  if (overlap) {
    const BinaryRelation iterated = compose(compose(a, inverse(a)), a);
    for (int x = 1; x <= n; ++x) {
      const Mask extra = iterated.row(x) & ~a.row(x);
      if (extra != 0) {
        throw FormError("relation is not difunctional: closure adds pair (" +
                            std::to_string(x) + "," +
                            std::to_string(min_element(extra)) + ")",
                        x, min_element(extra));
      }
    }
    throw FormError("relation is not difunctional", 0, 0);
  }
  return DifunRelation::from_block_pairs(n, rects);
}

BinaryRelation expand_pairs(const DifunRelation& d) {
  BinaryRelation out(d.n());
  for (int i = 0; i < d.rank(); ++i) {
    const Mask block = d.kernel().block(i);
    const Mask image = d.image_block(i);
    for (Mask m = block; m != 0; m &= m - 1) {
      const int x = min_element(m & (~m + 1));
      for (Mask im = image; im != 0; im &= im - 1) {
        out.add(x, min_element(im & (~im + 1)));
      }
    }
  }
  return out;
}

DifunRelation diamond(const DifunRelation& a, const DifunRelation& b) {
  check_same_n(a.n(), b.n());
  // (x,y) ∈ a⋄b iff x lies in a kernel block of a whose image block equals
  // a kernel block of b; the matched rectangle maps onto b's image block.
  std::vector<std::pair<Mask, Mask>> rects;
  for (int i = 0; i < a.rank(); ++i) {
    const Mask link = a.image_block(i);
    for (int j = 0; j < b.rank(); ++j) {
      if (b.kernel().block(j) == link) {
        rects.emplace_back(a.kernel().block(i), b.image_block(j));
        break;
      }
    }
  }
  return DifunRelation::from_block_pairs(a.n(), rects);
}

DifunRelation inverse(const DifunRelation& d) {
  std::vector<std::pair<Mask, Mask>> rects;
  rects.reserve(static_cast<std::size_t>(d.rank()));
  for (int i = 0; i < d.rank(); ++i) {
    rects.emplace_back(d.image_block(i), d.kernel().block(i));
  }
  return DifunRelation::from_block_pairs(d.n(), rects);
}

RelationParams params(const DifunRelation& d) {
  return RelationParams{d.rank(),     d.dom(),      d.codom(),  d.kernel(),
                        d.cokernel(), d.defect(),   d.codefect()};
}

bool is_partial_injection(const DifunRelation& d) {
  for (int i = 0; i < d.rank(); ++i) {
    if (popcount(d.kernel().block(i)) != 1) return false;
    if (popcount(d.cokernel().block(i)) != 1) return false;
  }
  return true;
}

}  // namespace difun
