#pragma once

#include <span>
#include <string>
#include <vector>

namespace qrob {

enum class LossKind { cross_entropy, nll };

LossKind loss_from_name(const std::string& name);
std::string loss_name(LossKind kind);

/// Probabilities are clamped to this floor before any log.
inline constexpr double kProbFloor = 1e-12;

/// -sum_i y_i log(max(p_i, floor)) on raw class probabilities.
double loss_nll(std::span<const double> y_onehot, std::span<const double> probs);

/// Log-softmax over the class-probability vector (treated as scores),
/// then NLL. Invariant under adding a constant to all entries.
double loss_cross_entropy(std::span<const double> y_onehot, std::span<const double> probs);

double loss_value(LossKind kind, std::span<const double> y_onehot, std::span<const double> probs);

/// d loss / d probs, same clamping as the forward definitions.
std::vector<double> loss_grad_probs(LossKind kind, std::span<const double> y_onehot,
                                    std::span<const double> probs);

}  // namespace qrob
