# Common configuration modules
