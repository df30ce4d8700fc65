#ifndef RICEBOUNDS_RICEBOUNDS_HPP
#define RICEBOUNDS_RICEBOUNDS_HPP

#include "ricebounds/errors.hpp"
#include "ricebounds/eval_result.hpp"
#include "ricebounds/ilhi.hpp"
#include "ricebounds/quad_oracle.hpp"
#include "ricebounds/rice_ie.hpp"
#include "ricebounds/special_core.hpp"
#include "ricebounds/toronto.hpp"

#endif // RICEBOUNDS_RICEBOUNDS_HPP
