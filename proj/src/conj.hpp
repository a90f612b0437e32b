#pragma once

#include "act.hpp"
#include "bsgs.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gt {

// Sorted element-hash fingerprint identifying a subgroup by its full element
// set. Equal subgroups always produce equal fingerprints; the (negligible,
// but nonzero) possibility of a collision between distinct subgroups is
// neutralized by explicit certificates in the functions below.
std::vector<std::uint64_t> subgroup_fingerprint(const std::vector<Perm>& elements);

// Normalizer of H in G, computed from the conjugation orbit of H's element
// set. Exactness is certified: every returned Schreier generator is checked
// to normalize H, and |G| must equal orbit size times normalizer order.
// Requires |H| <= elem_cap elements.
PermGroup normalizer(const PermGroup& G, const PermGroup& H,
                     std::uint64_t elem_cap = 20000,
                     std::uint64_t orbit_cap = 1u << 22);

// Centralizer of an element (conjugation orbit with Schreier stabilizer,
// orbit-stabilizer certified).
PermGroup centralizer(const PermGroup& G, const Perm& x,
                      std::uint64_t orbit_cap = 1u << 22);

// Size of the conjugacy class of x in G.
std::uint64_t conjugacy_class_size(const PermGroup& G, const Perm& x,
                                   std::uint64_t cap = 1u << 22);

// All elements of the conjugacy class of x in G.
std::vector<Perm> conjugacy_class(const PermGroup& G, const Perm& x,
                                  std::uint64_t cap = 1u << 22);

// An element g of G with K^g == L, or nullopt as a proof that K and L are
// not conjugate in G (the full conjugation orbit of K was enumerated and
// certified against |G : N_G(K)|). Found conjugators are verified
// explicitly. Throws length_error when a cap is exceeded.
std::optional<Perm> subgroup_transporter(const PermGroup& G, const PermGroup& K,
                                         const PermGroup& L,
                                         std::uint64_t elem_cap = 20000,
                                         std::uint64_t orbit_cap = 1u << 22);

// Conjugates of K under G as permutation groups (one per class element);
// intended for small classes.
std::vector<PermGroup> subgroup_class(const PermGroup& G, const PermGroup& K,
                                      std::uint64_t elem_cap = 20000,
                                      std::uint64_t orbit_cap = 1u << 14);

} // namespace gt
