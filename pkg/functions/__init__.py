# Package marker for the library and cloud functions.
