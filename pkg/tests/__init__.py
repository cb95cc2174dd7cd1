# Tests for Stickel
