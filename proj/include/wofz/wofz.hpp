/* Copyright 2026 The libwofz Authors.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef WOFZ_WOFZ_HPP
#define WOFZ_WOFZ_HPP

#include "wofz/analysis.hpp"
#include "wofz/bench.hpp"
#include "wofz/evaluate.hpp"
#include "wofz/extended.hpp"
#include "wofz/functions.hpp"
#include "wofz/io.hpp"
#include "wofz/oracle.hpp"
#include "wofz/table.hpp"

#endif // WOFZ_WOFZ_HPP
