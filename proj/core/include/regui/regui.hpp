#pragma once

#include "regui/classifier.hpp"
#include "regui/controller.hpp"
#include "regui/error.hpp"
#include "regui/geometry.hpp"
#include "regui/goldens.hpp"
#include "regui/layout_spec.hpp"
#include "regui/resolver.hpp"
#include "regui/svg.hpp"
#include "regui/validator.hpp"
