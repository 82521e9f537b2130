#pragma once

#include "cagrow/machine.hpp"

namespace cagrow {

// Two-track alphabets are flattened into pair symbols. Track-2 carries
// {B,0,1}; the pure-track-1 pair (s,B) keeps the bare name s, so plain
// configurations embed verbatim. Other pairs are named "s.0", "s.1", "B.0",
// "B.1"; the blank stays (B,B) = "B".
AlphabetPtr pair_alphabet(const AlphabetPtr& base);
std::string pair_symbol_name(const std::string& base_name, char track2);  // track2 in {'B','0','1'}

Configuration embed_track1(const Configuration& plain, const AlphabetPtr& paired);
Configuration project_track1(const Configuration& paired, const AlphabetPtr& plain);

// Track-2 bookkeeping that rules out cycles: every step of the wrapped
// machine either marks a fresh cell or extends the marked region by one via
// a breadcrumb walk. States of the output: the originals plus wr:<q>, wb:<q>.
TuringMachineSpec make_nocycle(const TuringMachineSpec& m);

// Name of the copy-loop entry state shared by make_fully_compute and
// make_minima_machine outputs. A standard Sm*F tape entered here in this
// state (head on S) proceeds straight to the Sm*f(m)F milestone.
inline constexpr const char* kLoopStartState = "cpFind";

// Wraps a machine that normally computes f (input SmF -> Sf(m)F, halting,
// never exiting S leftward) into one that, from a blank tape or from S*F,
// visits Sn*f(n)F for every n in increasing order and never halts. The
// initial state doubles as the S-restorer, so the S cell of a running
// computation always reads <S,q0,R>.
TuringMachineSpec make_fully_compute(const TuringMachineSpec& m_f);

// Two-track variant whose span trace dips exactly twice per loop iteration:
// once at Sn*f(n)F and once at Sn*F (projections of the local minima).
TuringMachineSpec make_minima_machine(const TuringMachineSpec& m_f);

}  // namespace cagrow
