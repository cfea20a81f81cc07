#pragma once

#include <string>

#include "taz/model.hpp"

namespace taz {

// Mutual exclusion by a shared lock variable and per-process clocks; the
// query asks whether the first two processes can both hold the critical
// section. Unreachable: the reentry delay (2) exceeds the write window (1).
Network gen_fischer(int n);

// Same protocol with the reentry delay lowered to the write window, which
// breaks mutual exclusion; the query becomes reachable.
Network gen_fischer_buggy(int n);

// A shared bus with collision detection (broadcast) and n stations; the
// query asks whether the bus can see an end of transmission while idle.
Network gen_csma(int n);

// Token ring with n stations, 3n + 2 clocks; the query asks whether one
// full token rotation can exceed 6n + 3 time units.
Network gen_fddi(int n);

// Three small pump nets, each making one source of bound constants
// irrelevant to what is actually reachable: a synchronization with no
// partner, a transition only enabled from an always-empty zone, and a
// transition disabled by an integer guard. Location-based bound
// computation must pay for the large constant; on-the-fly propagation
// never sees it.
Network gen_pump_sync();
Network gen_pump_empty();
Network gen_pump_int();

// family is one of fischer, fischer-buggy, csma, fddi, pump-sync,
// pump-empty, pump-int; n is ignored by the pump families
Network generate(const std::string& family, int n);

}  // namespace taz
