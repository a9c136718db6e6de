#ifndef STARLIKE_STARLIKE_HPP
#define STARLIKE_STARLIKE_HPP

#include <starlike/candidate.hpp>
#include <starlike/criteria.hpp>
#include <starlike/disk_oracle.hpp>
#include <starlike/errors.hpp>
#include <starlike/extremals.hpp>
#include <starlike/functionals.hpp>
#include <starlike/grids.hpp>
#include <starlike/identities.hpp>
#include <starlike/report.hpp>
#include <starlike/series.hpp>
#include <starlike/spec_file.hpp>
#include <starlike/version.hpp>

#endif
