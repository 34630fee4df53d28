/*
 * Copyright 2026 The icr Authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace icr {

/// Construction-time validation failure (bad samples, weights, schema, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A query outside a function's domain (curve span, angle range, distance).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// No control-parameter value gives every player at least its disagreement utility.
class NoFeasibleAgreement : public std::runtime_error {
 public:
  NoFeasibleAgreement(const std::string& msg, std::vector<double> disagreement)
      : std::runtime_error(msg), disagreement_(std::move(disagreement)) {}

  const std::vector<double>& disagreement() const noexcept { return disagreement_; }

 private:
  std::vector<double> disagreement_;
};

/// A player whose ideal utility equals its disagreement utility cannot be
/// placed on a proportionality line.
class DegeneratePlayer : public std::runtime_error {
 public:
  DegeneratePlayer(const std::string& msg, std::string player_id)
      : std::runtime_error(msg), player_(std::move(player_id)) {}

  const std::string& player() const noexcept { return player_; }

 private:
  std::string player_;
};

/// A stated goal cannot be met anywhere in the domain; carries the best
/// achievable value.
class InfeasibleGoal : public std::runtime_error {
 public:
  InfeasibleGoal(const std::string& msg, double best_achievable)
      : std::runtime_error(msg), best_achievable_(best_achievable) {}

  double best_achievable() const noexcept { return best_achievable_; }

 private:
  double best_achievable_;
};

/// Wraps a failure inside a named solution method so callers can tell which
/// method aborted an arbitration.
class SolverError : public std::runtime_error {
 public:
  SolverError(std::string method, const std::string& msg)
      : std::runtime_error(method + ": " + msg), method_(std::move(method)) {}

  const std::string& method() const noexcept { return method_; }

 private:
  std::string method_;
};

}  // namespace icr
