#pragma once

#include <stdexcept>
#include <string>

namespace subexp
{

// Base of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of a numeric routine.
class domain_error : public error
{
public:
    using error::error;
};

// Evaluation too close to a pole (zeta at s = 1).
class pole_error : public domain_error
{
public:
    using domain_error::domain_error;
};

class unsupported_point_error : public domain_error
{
public:
    using domain_error::domain_error;
};

// Errors in the description of a model: bad preset parameters, missing weights, schema problems.
class model_error : public error
{
public:
    using error::error;
};

class invalid_parameters_error : public model_error
{
public:
    using model_error::model_error;
};

class undefined_weight_error : public model_error
{
public:
    using model_error::model_error;
};

class unsupported_model_error : public model_error
{
public:
    using model_error::model_error;
};

class custom_model_error : public model_error
{
public:
    using model_error::model_error;
};

class schema_error : public model_error
{
public:
    using model_error::model_error;
};

// Poles not strictly increasing, or a non-positive residue.
class spectrum_error : public model_error
{
public:
    using model_error::model_error;
};

// 2 rho_{r-1} - rho_r > 0: no explicit formula.
class ineligible_spectrum_error : public model_error
{
public:
    using model_error::model_error;
};

class solver_error : public error
{
public:
    using error::error;
};

class no_bracket_error : public solver_error
{
public:
    using solver_error::solver_error;
};

class non_convergence_error : public solver_error
{
public:
    using solver_error::solver_error;
};

} // namespace subexp
