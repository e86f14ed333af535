#pragma once

#include <cstddef>

namespace gybe::limits {

// Cyclotomic orders are promoted to the lcm of the operand orders; anything
// past this cap is rejected instead of silently growing.
int field_order_cap();
void set_field_order_cap(int cap);

// Dense exact matrices refuse to allocate more than this many entries.
std::size_t matrix_entry_cap();
void set_matrix_entry_cap(std::size_t cap);

inline constexpr int kDefaultFieldOrder = 24;
inline constexpr int kDefaultFieldOrderCap = 360;
inline constexpr std::size_t kDefaultMatrixEntryCap = std::size_t{1} << 20;
inline constexpr std::size_t kDefaultClosureCap = 100000;
// Soft memory guard for group closure key storage, in bytes.
inline constexpr std::size_t kDefaultClosureMemoryGuard = std::size_t{1} << 30;

}  // namespace gybe::limits
