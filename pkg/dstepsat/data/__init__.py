#!/usr/bin/env python3
"""
Reference data: literature bounds on Delta(d, n), the computed results,
and the published candidate sets used as acceptance fixtures.
"""
