#ifndef WREATHKIT_WREATHKIT_HPP_
#define WREATHKIT_WREATHKIT_HPP_

#include "builders.hpp"
#include "clyndon.hpp"
#include "cosetenum.hpp"
#include "error.hpp"
#include "fingrp.hpp"
#include "io.hpp"
#include "presentation.hpp"
#include "rational.hpp"
#include "smallcanc.hpp"
#include "snf.hpp"
#include "stallings.hpp"
#include "words.hpp"
#include "wlp.hpp"

namespace wreathkit {
  inline constexpr char const* version = "0.1.0";
}

#endif  // WREATHKIT_WREATHKIT_HPP_
