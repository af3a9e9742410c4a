/*
   Copyright 2026 The eulerlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EULERLAB_EULERLAB_HPP
#define EULERLAB_EULERLAB_HPP

#include <eulerlab/analytic.hpp>
#include <eulerlab/cache.hpp>
#include <eulerlab/characters.hpp>
#include <eulerlab/classnumber.hpp>
#include <eulerlab/cyclotomic.hpp>
#include <eulerlab/errors.hpp>
#include <eulerlab/euler.hpp>
#include <eulerlab/iwasawa.hpp>
#include <eulerlab/json.hpp>
#include <eulerlab/number_theory.hpp>
#include <eulerlab/padics.hpp>
#include <eulerlab/rational.hpp>

#endif
