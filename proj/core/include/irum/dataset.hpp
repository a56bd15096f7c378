#pragma once

#include "irum/core.hpp"
#include "irum/falsify.hpp"

#include <string>

namespace irum::dataset {

// Dataset document:
//   { "alternatives": ["c", "s", "f"],
//     "choices": [ { "menu": ["c", "s"], "probs": { "c": "1/2", "s": "0.5" } }, ... ] }
// Probabilities are rational strings (INTEGER, INTEGER/POSITIVE_INTEGER, or
// a finite decimal) or plain JSON integers; members missing from "probs"
// get probability zero. Every menu of the domain must appear exactly once
// and each row must sum to one exactly.
StochasticChoiceFunction parse_dataset(const std::string& text);

// Inverse of parse_dataset, probabilities as exact rational strings.
std::string dataset_to_json(const StochasticChoiceFunction& rho);

// Menu key used in model documents: member labels sorted lexicographically,
// joined by "|".
std::string menu_key(const AlternativeSet& alt_set, Menu menu);

// Random-choice-model document:
//   { "support": [ { "weight": "1/2", "irrational": true,
//                    "choice": { "c|f|s": "s", "c|s": "c", ... } }, ... ] }
std::string rcm_to_json(const AlternativeSet& alt_set, const RandomChoiceModel& mu);
RandomChoiceModel parse_rcm(const AlternativeSet& alt_set, const std::string& text);

// Family document: { "vertices": [ <rcm document object>, ... ] }.
falsify::IrrationalFamily parse_family(const AlternativeSet& alt_set,
                                       const std::string& text);
std::string family_to_json(const AlternativeSet& alt_set,
                           const falsify::IrrationalFamily& family);

}  // namespace irum::dataset
