#pragma once

#include "momg/grid.hpp"
#include "momg/moment_rep.hpp"

namespace momg {

/// Moment coefficients of the full-space flux xi_axis * f, in the basis of w.
/// The coefficient above the truncation order is dropped (the closure).
MomentRep<double> full_flux_coeffs(const MomentRep<double>& w, int axis);

/// Moment coefficients of the half-space flux of w through the plane
/// xi_axis = 0, taken over xi_axis > 0 (positive_side) or xi_axis < 0.
/// Evaluated in the basis of w via half-range Hermite pairing recurrences.
MomentRep<double> half_flux_coeffs(const MomentRep<double>& w, int axis,
                                   bool positive_side);

/// Two-point numerical flux at a face with normal +axis, evaluated in a
/// face-local basis (the arithmetic mean of the two states' basis params).
/// Signal bounds u_n -+ c_bound*sqrt(theta) select full upwinding when the
/// whole wave fan is one-sided, and the half-space split otherwise. Both
/// states must be Grad-normalized.
MomentRep<double> face_flux(const MomentRep<double>& left,
                            const MomentRep<double>& right, int axis,
                            double c_bound);

/// face_flux projected into `target` for assembly into a cell residual.
MomentRep<double> numerical_flux(const MomentRep<double>& left,
                                 const MomentRep<double>& right, int axis,
                                 double c_bound, const BasisParams<double>& target);

/// Diffuse-wall flux through a boundary face with normal +axis, in the wall
/// basis (tangential wall velocity, wall theta). `wall_on_high_side` is true
/// for right/top walls. The outgoing half-space flux comes from `inside`;
/// the incoming one from a wall Maxwellian whose density enforces zero net
/// mass flux, so the mass component of the result is exactly zero.
MomentRep<double> wall_flux(const MomentRep<double>& inside, int axis,
                            bool wall_on_high_side, const WallSpec& wall);

}  // namespace momg
