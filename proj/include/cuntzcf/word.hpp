#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cuntzcf {

/// A letter of the alphabet N = {1, 2, 3, ...}; also a partial quotient.
using Letter = std::uint64_t;

/// Finite word over N. Every letter is >= 1.
using Word = std::vector<Letter>;

/// Length of the shortest p with w[i] = w[i + p] (KMP failure function).
std::size_t smallest_period(std::span<const Letter> w);

/// True iff w is not a proper power, i.e. no nontrivial rotation fixes it.
bool is_primitive(std::span<const Letter> w);

/// The shortest u with w = u^k.
Word primitive_root(std::span<const Letter> w);

/// Start index of the lexicographically least rotation (two-pointer scan, linear time).
std::size_t least_rotation_index(std::span<const Letter> w);

Word least_rotation(std::span<const Letter> w);

/// Rotation left by k positions.
Word rotate_left(std::span<const Letter> w, std::size_t k);

/// Same length and one is a rotation of the other.
bool rotation_equal(std::span<const Letter> a, std::span<const Letter> b);

/// `1,2,3`
std::string format_word(std::span<const Letter> w);

/// Parses `1,2,3` (empty string gives the empty word). Throws ParseError
/// on malformed input or a letter < 1.
Word parse_word(std::string_view text);

}  // namespace cuntzcf
