#pragma once

#include "twoadic/binary_sequence.hpp"
#include "twoadic/complexity.hpp"
#include "twoadic/correlation.hpp"
#include "twoadic/errors.hpp"
#include "twoadic/generators.hpp"
#include "twoadic/gf2poly.hpp"
#include "twoadic/numtheory.hpp"
#include "twoadic/serialize.hpp"
#include "twoadic/sweep.hpp"
