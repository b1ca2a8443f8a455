#pragma once

#include <string_view>

// Shared grammar fixtures.  kNine is the running example used across
// the test suites; kTwelve is its empty-production-free form, and
// kTwelveEncoded the final top-down-parsable form of that grammar.

namespace fixtures {

inline constexpr std::string_view kNine =
    "s(s(NP,VP)) --> np(NP), vp(VP).\n"
    "np(np(N,C)) --> n(N), comp(C).\n"
    "n(n(people)) --> [people].\n"
    "n(n(you)) --> [].\n"
    "vp(vp(v(sleep),C)) --> [sleep], comp(C).\n"
    "comp(c(C,A)) --> comp(C), adv(A).\n"
    "comp(nil) --> [].\n"
    "adv(adv(here)) --> [here].\n"
    "adv(adv(today)) --> [today].\n";

// The twelve-rule result of eliminating the two empty productions of
// kNine, as published: the seven surviving rules first, then the five
// generated ones.
inline constexpr std::string_view kTwelve =
    "s(s(NP,VP)) --> np(NP), vp(VP).\n"
    "np(np(N,C)) --> n(N), comp(C).\n"
    "n(n(people)) --> [people].\n"
    "vp(vp(v(sleep),C)) --> [sleep], comp(C).\n"
    "comp(c(C,A)) --> comp(C), adv(A).\n"
    "adv(adv(here)) --> [here].\n"
    "adv(adv(today)) --> [today].\n"
    "np(np(n(you),C)) --> comp(C).\n"
    "np(np(N,nil)) --> n(N).\n"
    "comp(c(nil,A)) --> adv(A).\n"
    "vp(vp(v(sleep),nil)) --> [sleep].\n"
    "s(s(np(n(you),nil),VP)) --> vp(VP).\n";

// The same twelve rules in the order eliminate_empty emits them: the
// scan visits the vp rule before the comp rule, so the generated tail
// swaps those two entries relative to the published listing.
inline constexpr std::string_view kTwelveGenerated =
    "s(s(NP,VP)) --> np(NP), vp(VP).\n"
    "np(np(N,C)) --> n(N), comp(C).\n"
    "n(n(people)) --> [people].\n"
    "vp(vp(v(sleep),C)) --> [sleep], comp(C).\n"
    "comp(c(C,A)) --> comp(C), adv(A).\n"
    "adv(adv(here)) --> [here].\n"
    "adv(adv(today)) --> [today].\n"
    "np(np(n(you),C)) --> comp(C).\n"
    "np(np(N,nil)) --> n(N).\n"
    "vp(vp(v(sleep),nil)) --> [sleep].\n"
    "comp(c(nil,A)) --> adv(A).\n"
    "s(s(np(n(you),nil),VP)) --> vp(VP).\n";

// Expected encoding of kTwelve: the two seed rules, then one rule per
// input rule in input order.
inline constexpr std::string_view kTwelveEncoded =
    "g(X) --> g(Y), d(Y,X).\n"
    "g(X) --> t(X).\n"
    "d(np(NP),s(s(NP,VP))) --> g(vp(VP)).\n"
    "d(n(N),np(np(N,C))) --> g(comp(C)).\n"
    "t(n(n(people))) --> [people].\n"
    "t(vp(vp(v(sleep),C))) --> [sleep], g(comp(C)).\n"
    "d(comp(C),comp(c(C,A))) --> g(adv(A)).\n"
    "t(adv(adv(here))) --> [here].\n"
    "t(adv(adv(today))) --> [today].\n"
    "d(comp(C),np(np(n(you),C))) --> [].\n"
    "d(n(N),np(np(N,nil))) --> [].\n"
    "d(adv(A),comp(c(nil,A))) --> [].\n"
    "t(vp(vp(v(sleep),nil))) --> [sleep].\n"
    "d(vp(VP),s(s(np(n(you),nil),VP))) --> [].\n";

// Expected final form: the three replacement rules, then the encoded
// rules of kTwelve.
inline constexpr std::string_view kTwelveFinal =
    "g(X) --> t(Y), d_tc(Y,X).\n"
    "d_tc(X,X) --> [].\n"
    "d_tc(X,Z) --> d(X,Y), d_tc(Y,Z).\n"
    "d(np(NP),s(s(NP,VP))) --> g(vp(VP)).\n"
    "d(n(N),np(np(N,C))) --> g(comp(C)).\n"
    "t(n(n(people))) --> [people].\n"
    "t(vp(vp(v(sleep),C))) --> [sleep], g(comp(C)).\n"
    "d(comp(C),comp(c(C,A))) --> g(adv(A)).\n"
    "t(adv(adv(here))) --> [here].\n"
    "t(adv(adv(today))) --> [today].\n"
    "d(comp(C),np(np(n(you),C))) --> [].\n"
    "d(n(N),np(np(N,nil))) --> [].\n"
    "d(adv(A),comp(c(nil,A))) --> [].\n"
    "t(vp(vp(v(sleep),nil))) --> [sleep].\n"
    "d(vp(VP),s(s(np(n(you),nil),VP))) --> [].\n";

// A chain cycle that never consumes input: infinitely ambiguous.
inline constexpr std::string_view kChainCycle =
    "s --> [b], a.\n"
    "a --> a.\n"
    "a --> [].\n";

// Empty elimination would have to fold succ(...) forever.
inline constexpr std::string_view kCounting =
    "s(X) --> [number], a(X).\n"
    "a(succ(X)) --> a(X).\n"
    "a(zero) --> [].\n";

}  // namespace fixtures
