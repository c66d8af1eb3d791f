#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stringc/sggi.hpp"

namespace stringc {

struct BlockActionResult {
  Order image_order = 1;
  Order kernel_order = 1;
  std::vector<Permutation> image_generators;  // on block indices
  std::vector<Permutation> kernel_generators; // fix every block setwise
};

BlockActionResult block_action(const PermGroup& g, const BlockSystem& b);

struct LcrDecomposition {
  IndexSet L, C, R;
};

// Greedy L (scan 0..r-1, then prune right to left), C commutes with all of L.
LcrDecomposition lcr_decompose(const Sggi& s, const BlockSystem& b);

enum class KernelClass { trivial, c2, c2_m_minus_1, c2_m, other };
std::string to_string(KernelClass k);
KernelClass classify_kernel(const BlockActionResult& result, std::size_t m);

// Index of G in C2 wr H for blocks of size 2, H the block image.
Order wreath_index(const PermGroup& g, const BlockActionResult& result, std::size_t m);
// Swaps the two points of every block.
Permutation all_swap(const BlockSystem& b);

// 0/1 vectors over the blocks: O, U, L_i, R_i, V_i, T_i.
enum class Form { O, U, L, R, V, T, other };

struct NamedVector {
  Form form = Form::O;
  std::size_t index = 0;
  std::vector<std::uint8_t> bits(std::size_t m) const; // empty when the index does not fit m
  std::string str() const;                             // "L_3", "U"
  friend bool operator==(const NamedVector&, const NamedVector&) = default;
};

struct KernelVector {
  std::vector<std::uint8_t> bits;
  NamedVector named; // form other when no pattern fits
  std::string str() const;
};

// Names a bit vector, trying O, U, L, R, V, T in that order.
KernelVector name_vector(std::vector<std::uint8_t> bits);

// Size-2 blocks arranged along the block-action path, each as (smaller, larger) point.
struct OrderedBlocks {
  std::vector<std::pair<point_t, point_t>> blocks;
  std::size_t size() const { return blocks.size(); }
};

// Path formed by generators whose block image is a single transposition.
// Empty when that graph is not a path through all blocks.
std::optional<OrderedBlocks> order_blocks(const Sggi& s, const BlockSystem& b);

// Vector of an element fixing every block; empty if it moves a block.
std::optional<KernelVector> kernel_vector(const Permutation& g, const OrderedBlocks& ob);

// delta_i = (rho_i rho_{i+1})^3 for 1 <= i <= r-2.
std::optional<KernelVector> delta_vector(const Sggi& s, std::size_t i, const OrderedBlocks& ob);

// alpha_i = rho_i beta_i where beta_i swaps B_i and B_{i+1} pointwise; 1 <= i <= r-1.
// Empty unless rho_i swaps exactly those two blocks.
std::optional<KernelVector> alpha_vector(const Sggi& s, std::size_t i, const OrderedBlocks& ob);

// Table of possible delta vectors indexed by (alpha_i, alpha_{i+1}); 1 <= i <= r-2.
std::vector<NamedVector> delta_table_rows(std::size_t i, std::size_t r);
std::vector<NamedVector> delta_table_cols(std::size_t i, std::size_t r);
// Empty for the cells marked odd.
std::optional<NamedVector> delta_table_entry(std::size_t i, std::size_t r, std::size_t row, std::size_t col);

struct DeltaCheck {
  bool ok = true;
  std::string detail;
};
// Locates alpha_i, alpha_{i+1} in the table by bit pattern and compares delta_i.
DeltaCheck check_delta_table(const Sggi& s, std::size_t i, const OrderedBlocks& ob);

} // namespace stringc
