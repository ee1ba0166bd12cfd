// Copyright 2026 The sep2xn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace sep2xn {

/// Numerical thresholds shared by every stage of the analysis. All values are
/// relative unless stated otherwise.
struct ToleranceConfig {
    /// Singular values below rank_rel_tol * sigma_max count as zero.
    double rank_rel_tol = 1e-9;
    /// Eigenvalue floor for positivity, relative to the operator norm.
    double psd_tol = 1e-9;
    /// Back-substitution residual bound for polynomial roots.
    double root_residual_tol = 1e-8;
    /// Certificate reconstruction bound, relative to the operator norm.
    double cert_recon_tol = 1e-8;
    /// Distance of a found product vector from its target subspace.
    double membership_tol = 1e-7;
    /// Absolute radius under which two roots are merged.
    double merge_radius = 1e-6;

    /// Throws InvalidArgument if a field is out of range.
    void validate() const;
};

/// Relative threshold for trimming near-zero leading polynomial coefficients.
inline constexpr double kCoefficientTrimTol = 1e-12;

/// Subtractions leaving an eigenvalue within this factor of the rank cutoff
/// have an ambiguous rank case and are avoided when a choice exists.
inline constexpr double kRankCaseMargin = 100.0;

}  // namespace sep2xn
