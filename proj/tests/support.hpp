#pragma once

#include <string>

#include <doctest.h>

#include <subexp/numeric.hpp>

namespace subexp::testing
{

inline Real rel_err(const Real &got, const Real &want)
{
    return abs(got - want) / abs(want);
}

inline void check_rel(const Real &got, const Real &want, double tol)
{
    INFO("got " << got.str(25) << " want " << want.str(25));
    CHECK(rel_err(got, want) <= Real(tol));
}

inline void check_abs(const Real &got, const Real &want, double tol)
{
    INFO("got " << got.str(25) << " want " << want.str(25));
    CHECK(abs(got - want) <= Real(tol));
}

} // namespace subexp::testing
